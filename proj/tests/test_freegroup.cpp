#include <doctest.h>

#include "lcskit/errors.hpp"
#include "lcskit/word.hpp"
#include "support.hpp"

using namespace lcs;
using lcs::testing::naive_reduce;

namespace {
const Word x = Word::generator(1), y = Word::generator(2), z = Word::generator(3);
const Word X = x.inverse(), Y = y.inverse();
}  // namespace

TEST_CASE("parse expands commutator shorthand") {
  const Presentation p = parse_presentation("gens x, y\nrels [y,x]");
  CHECK(p.rank == 2);
  CHECK(p.generator_names == std::vector<std::string>{"x", "y"});
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relators[0] == Y * X * y * x);
}

TEST_CASE("parse powers and drops trivial relators") {
  CHECK(parse_presentation("gens x, y\nrels x^2, y^2").relators == std::vector<Word>{x * x, y * y});
  const Presentation p = parse_presentation("gens x\nrels x x^-1");
  CHECK(p.rank == 1);
  CHECK(p.relators.empty());
}

TEST_CASE("parse grammar details") {
  auto rel = [](const char* text) { return parse_presentation(text).relators.at(0); };
  CHECK(rel("gens x,y\nrels (x y)^-2") == Y * X * Y * X);
  CHECK(rel("gens x,y\nrels [y,x,x]") == commutator(commutator(y, x), x));
  CHECK(rel("gens x,y\nrels [x y, y]^2") == power(commutator(x * y, y), 2));
  CHECK(rel("gens x,y\nrels xy^2") == x * y * y);
  CHECK(rel("# comment\ngens x, y   # trailing\n\nrels  x ^ 3 ,y") == x * x * x);
  const Presentation multi = parse_presentation("gens a, b\nrels a^2\nrels b^3");
  CHECK(multi.relators.size() == 2);
  CHECK(parse_presentation("gens x, y\nrels").relators.empty());
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_presentation("gens x\nrels x^0"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens x\nrels y"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens x, x\nrels x"), ParseError);
  CHECK_THROWS_AS(parse_presentation("rels x"), ParseError);
  try {
    parse_presentation("gens x, y\nrels x^2, [y,x\n");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() > 1);
    CHECK(std::string(e.what()).rfind("parse: 2:", 0) == 0);
  }
}

TEST_CASE("multiply and invert") {
  CHECK(multiply(x, X).empty());
  CHECK(invert(x * y) == Y * X);
  CHECK(multiply(x * y, Y * z) == x * z);
  CHECK(to_string(x * x * Y * x, std::vector<std::string>{"x", "y"}) == "x^2 y^-1 x");
  CHECK(to_string(Word(), {}) == "1");
}

TEST_CASE("commutator basics") {
  CHECK(commutator(x, x).empty());
  CHECK(commutator(y, x) == Word({{2, -1}, {1, -1}, {2, 1}, {1, 1}}));
  // (xy)^-1 y^-1 (xy) y, letter by letter
  const std::vector<Letter> raw{{2, -1}, {1, -1}, {2, -1}, {1, 1}, {2, 1}, {2, 1}};
  CHECK(commutator(x * y, y) == Word(naive_reduce(raw)));
}

TEST_CASE("power, conjugate, cyclic reduction") {
  CHECK(power(x * y, 3) == x * y * x * y * x * y);
  CHECK(power(x * y, -2) == Y * X * Y * X);
  CHECK(power(x, 0).empty());
  CHECK(conjugate(y, x) == X * y * x);
  CHECK(cyclically_reduce(X * y * x) == y);
  CHECK(cyclically_reduce(x * y * y * X) == y * y);
}

TEST_CASE("free reduction is confluent") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const auto letters = lcs::testing::random_letters(rng, 3, 16);
    const Word w(letters);
    CHECK(std::vector<Letter>(w.letters().begin(), w.letters().end()) == naive_reduce(letters));
    CHECK(std::vector<Letter>(w.letters().begin(), w.letters().end()) ==
          lcs::testing::random_order_reduce(letters, rng));
  }
}

TEST_CASE("multiplication is associative and inversion an involution") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 300; ++t) {
    const Word a = lcs::testing::random_word(rng, 3, 8), b = lcs::testing::random_word(rng, 3, 8),
               c = lcs::testing::random_word(rng, 3, 8);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a.inverse().inverse() == a);
    CHECK((a * a.inverse()).empty());
    CHECK(commutator(a, a).empty());
    CHECK(commutator(a, a.inverse()).empty());
  }
}

TEST_CASE("Witt-Hall identity holds exactly with leading [c,b]^-1") {
  const Word gens[] = {x, y, z};
  for (const auto& a : gens)
    for (const auto& b : gens)
      for (const auto& c : gens) {
        const Word lhs = left_normed(std::vector<Word>{c, b, a});
        const Word rhs = commutator(c, b).inverse() * commutator(c, a).inverse() *
                         left_normed(std::vector<Word>{b, a, c}).inverse() * commutator(b, a).inverse() *
                         commutator(c, b) * commutator(c, a) * left_normed(std::vector<Word>{c, a, b}) *
                         commutator(b, a);
        CHECK(lhs == rhs);
      }
}

TEST_CASE("cyclically reduced presentation keeps relator count") {
  const Presentation p = cyclically_reduced(parse_presentation("gens x, y\nrels x^-1 y^2 x, y x y^-1"));
  CHECK(p.relators == std::vector<Word>{y * y, x});
}
