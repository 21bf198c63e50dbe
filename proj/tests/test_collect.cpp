#include <doctest.h>

#include "lcskit/collect.hpp"
#include "lcskit/errors.hpp"
#include "support.hpp"

using namespace lcs;

namespace {

const Word x1 = Word::generator(1), x2 = Word::generator(2), x3 = Word::generator(3);

IntVector vec(std::initializer_list<long> v) {
  IntVector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (long e : v) out[i++] = e;
  return out;
}

ExponentVector random_vector(std::mt19937_64& rng, const HallBasis& b, int cutoff) {
  std::uniform_int_distribution<int> e(-3, 3);
  ExponentVector v;
  v.cutoff = cutoff;
  v.coords = IntVector::Zero(b.count_up_to(cutoff));
  for (Eigen::Index i = 0; i < v.coords.size(); ++i) v.coords[i] = e(rng);
  return v;
}

}  // namespace

TEST_CASE("collect examples") {
  const Collector c(2, 3);
  CHECK(c.collect(x1, 2).coords == vec({1, 0, 0}));
  CHECK(c.collect(commutator(x2, x1), 3).coords == vec({0, 0, 1, 0, 0}));
  // x2 x1 = x1 x2 [x2,x1]
  CHECK(x2 * x1 == x1 * x2 * commutator(x2, x1));
  CHECK(c.collect(x2 * x1, 2).coords == vec({1, 1, 1}));
  CHECK(c.collect(Word(), 3).is_zero());
}

TEST_CASE("Jacobi word collects to zero through weight 3") {
  const Collector c(3, 3);
  const Word g[] = {x1, x2, x3};
  for (const auto& a : g)
    for (const auto& b : g)
      for (const auto& d : g) {
        const Word j = left_normed(std::vector<Word>{a, b, d}) * left_normed(std::vector<Word>{b, d, a}) *
                       left_normed(std::vector<Word>{d, a, b});
        CHECK(c.collect(j, 3).is_zero());
      }
}

TEST_CASE("weight components") {
  const Collector c(2, 3);
  CHECK(c.weight_component(commutator(x2, x1), 2) == vec({1}));
  CHECK(c.weight_component(power(commutator(x2, x1), 2), 2) == vec({2}));
  CHECK(c.weight_component(commutator(commutator(x2, x1), x1), 3) == vec({1, 0}));
  CHECK(c.weight_component(x1 * x2, 1) == vec({1, 1}));
  try {
    c.weight_component(x2 * commutator(x2, x1), 2);
    FAIL("no throw");
  } catch (const NotInGamma& e) {
    CHECK(e.witness_index() == 1);
    CHECK(e.witness_weight() == 1);
  }
  CHECK_THROWS_AS(c.collect(x1, 4), std::invalid_argument);
  CHECK(weight_component(commutator(x2, x1), 2, 2) == vec({1}));
}

TEST_CASE("expand then collect round trip") {
  std::mt19937_64 rng(21);
  for (int q = 1; q <= 3; ++q) {
    const Collector c(q, 4);
    for (int t = 0; t < 40; ++t) {
      const int cutoff = 1 + t % 4;
      const ExponentVector v = random_vector(rng, c.basis(), cutoff);
      CHECK(c.collect(c.expand(v), cutoff) == v);
    }
  }
}

TEST_CASE("weight one coordinates are exponent sums") {
  std::mt19937_64 rng(22);
  const Collector c(3, 3);
  for (int t = 0; t < 100; ++t) {
    const Word u = lcs::testing::random_word(rng, 3, 10), v = lcs::testing::random_word(rng, 3, 10);
    const IntVector a = c.collect(u, 3).weight_slice(c.basis(), 1);
    const IntVector b = c.collect(v, 3).weight_slice(c.basis(), 1);
    CHECK(c.collect(u * v, 3).weight_slice(c.basis(), 1) == IntVector(a + b));
    for (int g = 1; g <= 3; ++g) CHECK(a[g - 1] == BigInt(u.exponent_sum(g)));
  }
}

TEST_CASE("additivity on gamma_n") {
  std::mt19937_64 rng(23);
  const Collector c(3, 4);
  const HallBasis& b = c.basis();
  std::uniform_int_distribution<int> e(-2, 2);
  for (int n = 2; n <= 4; ++n)
    for (int t = 0; t < 20; ++t) {
      Word u, v;
      for (int i = b.weight_begin(n); i < b.weight_end(n); ++i) {
        u *= power(b.word(i), e(rng));
        v *= power(b.word(i), e(rng));
      }
      CHECK(c.weight_component(u * v, n) == IntVector(c.weight_component(u, n) + c.weight_component(v, n)));
    }
}

TEST_CASE("commutator powers scale") {
  const Collector c(2, 5);
  const HallBasis& b = c.basis();
  for (int i = 0; i < b.count_up_to(2); ++i)
    for (int j = 0; j < i; ++j) {
      const int w = b[i].weight + b[j].weight;
      const Word cm = commutator(b.word(i), b.word(j));
      const IntVector one = c.weight_component(cm, w);
      for (int k : {-2, 2, 3}) CHECK(c.weight_component(power(cm, k), w) == IntVector(BigInt(k) * one));
    }
}

TEST_CASE("Hall collection agrees with the Magnus embedding") {
  std::mt19937_64 rng(24);
  for (int q = 1; q <= 3; ++q) {
    const int cutoff = q == 3 ? 4 : 5;
    const Collector hall(q, cutoff);
    const MagnusCollector magnus(q, cutoff);
    for (int t = 0; t < 30; ++t) {
      const Word w = lcs::testing::random_word(rng, q, 10);
      const int n = 1 + t % cutoff;
      CHECK(hall.collect(w, n) == magnus.collect(w, n));
    }
  }
}

TEST_CASE("Magnus embedding on known words") {
  const MagnusCollector m(2, 3);
  CHECK(m.collect(x2 * x1, 2).coords == vec({1, 1, 1}));
  CHECK(m.collect(commutator(commutator(x2, x1), x2), 3).coords == vec({0, 0, 0, 0, 1}));
}

TEST_CASE("length cap raises a resource limit") {
  Collector c(2, 6, CollectOptions{50});
  const Word w = power(x2, 9) * power(x1, -9) * power(x2, -7) * power(x1, 8);
  CHECK_THROWS_AS(c.collect(w, 6), ResourceLimit);
  c.set_length_cap(1'000'000);
  CHECK_NOTHROW(c.collect(w, 6));
}

TEST_CASE("stats count collected words") {
  const Collector c(2, 3);
  c.reset_stats();
  c.collect(x2 * x1, 3);
  c.collect(x1, 3);
  CHECK(c.stats().words == 2);
  CHECK(c.stats().max_length >= 2);
}
