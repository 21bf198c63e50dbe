#include "lcskit/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <optional>
#include <set>
#include <sstream>

#include "lcskit/errors.hpp"

namespace lcs {

namespace {

// Appends with cancellation against the current tail (one-pass stack reduction).
void push_reduced(std::vector<Letter>& out, const Letter& l) {
  if (!out.empty() && out.back().generator == l.generator && out.back().sign == -l.sign) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

Word::Word(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (const auto& l : letters) push_reduced(letters_, l);
}

Word Word::from_signed(std::span<const int> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (int s : letters) out.push_back(Letter{std::abs(s), s > 0 ? 1 : -1});
  return Word(std::move(out));
}

int Word::max_generator() const {
  int m = 0;
  for (const auto& l : letters_) m = std::max(m, l.generator);
  return m;
}

std::int64_t Word::exponent_sum(int g) const {
  std::int64_t s = 0;
  for (const auto& l : letters_)
    if (l.generator == g) s += l.sign;
  return s;
}

Word Word::inverse() const {
  Word r;
  r.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back(it->inverse());
  return r;
}

Word& Word::operator*=(const Word& other) {
  std::size_t k = 0;
  while (k < other.letters_.size() && !letters_.empty() &&
         letters_.back() == other.letters_[k].inverse()) {
    letters_.pop_back();
    ++k;
  }
  letters_.insert(letters_.end(), other.letters_.begin() + static_cast<std::ptrdiff_t>(k),
                  other.letters_.end());
  return *this;
}

Word commutator(const Word& u, const Word& v) { return u.inverse() * v.inverse() * u * v; }

Word left_normed(std::span<const Word> entries) {
  if (entries.empty()) return {};
  Word acc = entries[0];
  for (std::size_t i = 1; i < entries.size(); ++i) acc = commutator(acc, entries[i]);
  return acc;
}

Word power(const Word& u, std::int64_t k) {
  const Word base = k < 0 ? u.inverse() : u;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  Word result;
  Word sq = base;
  while (e) {
    if (e & 1) result *= sq;
    e >>= 1;
    if (e) sq = sq * sq;
  }
  return result;
}

Word conjugate(const Word& u, const Word& by) { return by.inverse() * u * by; }

Word cyclically_reduce(const Word& u) {
  auto letters = u.letters();
  std::size_t lo = 0, hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == letters[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(letters.begin() + static_cast<std::ptrdiff_t>(lo),
                                  letters.begin() + static_cast<std::ptrdiff_t>(hi)));
}

std::string to_string(const Word& w, std::span<const std::string> names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  auto letters = w.letters();
  bool first = true;
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    const int g = letters[i].generator;
    const long run = static_cast<long>(j - i) * letters[i].sign;
    if (!first) os << ' ';
    first = false;
    if (g >= 1 && static_cast<std::size_t>(g) <= names.size())
      os << names[static_cast<std::size_t>(g - 1)];
    else
      os << 'x' << g;
    if (run != 1) os << '^' << run;
    i = j;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Presentation parser

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class LineParser {
 public:
  LineParser(const std::string& line, int line_no, std::size_t offset,
             const std::vector<std::string>& names)
      : s_(line), line_(line_no), pos_(offset), names_(names) {}

  std::vector<std::string> parse_name_list() {
    std::vector<std::string> out;
    skip_ws();
    if (at_end()) return out;
    while (true) {
      skip_ws();
      if (at_end() || !is_ident_start(peek())) fail("expected generator name");
      std::size_t start = pos_;
      while (!at_end() && is_ident_char(peek())) ++pos_;
      out.push_back(s_.substr(start, pos_ - start));
      skip_ws();
      if (at_end()) break;
      expect(',');
    }
    return out;
  }

  std::vector<Word> parse_word_list() {
    std::vector<Word> out;
    skip_ws();
    if (at_end()) return out;
    while (true) {
      out.push_back(parse_word());
      skip_ws();
      if (at_end()) break;
      expect(',');
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, static_cast<int>(pos_) + 1);
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  // word := factor+
  Word parse_word() {
    Word w;
    bool any = false;
    while (true) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c == ',' || c == ']' || c == ')') break;
      w *= parse_factor();
      any = true;
    }
    if (!any) fail("expected word");
    return w;
  }

  // factor := primary ('^' int)*
  Word parse_factor() {
    Word w = parse_primary();
    while (true) {
      skip_ws();
      if (at_end() || peek() != '^') break;
      ++pos_;
      w = power(w, parse_exponent());
    }
    return w;
  }

  std::int64_t parse_exponent() {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      negative = peek() == '-';
      ++pos_;
    }
    skip_ws();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer exponent");
    std::int64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1'000'000) fail("exponent too large");
      ++pos_;
    }
    if (v == 0) {
      pos_ = start;
      fail("zero exponent");
    }
    return negative ? -v : v;
  }

  // primary := name | '[' word (',' word)+ ']' | '(' word ')'
  Word parse_primary() {
    skip_ws();
    const char c = peek();
    if (c == '[') {
      ++pos_;
      std::vector<Word> entries{parse_word()};
      skip_ws();
      while (!at_end() && peek() == ',') {
        ++pos_;
        entries.push_back(parse_word());
        skip_ws();
      }
      if (entries.size() < 2) fail("commutator needs at least two entries");
      expect(']');
      return left_normed(entries);
    }
    if (c == '(') {
      ++pos_;
      Word w = parse_word();
      expect(')');
      return w;
    }
    if (is_ident_start(c)) return parse_names();
    fail(std::string("unexpected character '") + c + "'");
  }

  // An identifier run is either a generator name or a juxtaposition of
  // names without spaces ("xy"), split by longest prefix. An exponent after
  // a juxtaposition binds to the last name only.
  Word parse_names() {
    const std::size_t start = pos_;
    while (!at_end() && is_ident_char(peek())) ++pos_;
    const std::string run = s_.substr(start, pos_ - start);
    std::vector<int> gens;
    std::size_t i = 0;
    while (i < run.size()) {
      int best = -1;
      std::size_t best_len = 0;
      for (std::size_t g = 0; g < names_.size(); ++g) {
        const auto& n = names_[g];
        if (n.size() > best_len && run.compare(i, n.size(), n) == 0) {
          best = static_cast<int>(g) + 1;
          best_len = n.size();
        }
      }
      if (best < 0) {
        pos_ = start;
        fail("unknown generator '" + run + "'");
      }
      gens.push_back(best);
      i += best_len;
    }
    if (gens.size() > 1) {
      Word prefix;
      for (std::size_t k = 0; k + 1 < gens.size(); ++k) prefix *= Word::generator(gens[k]);
      Word last = Word::generator(gens.back());
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        last = power(last, parse_exponent());
      }
      return prefix * last;
    }
    return Word::generator(gens.front());
  }

  const std::string& s_;
  int line_;
  std::size_t pos_;
  const std::vector<std::string>& names_;
};

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Presentation p;
  bool have_gens = false;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  const std::vector<std::string> no_names;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    std::size_t k = 0;
    while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    if (k == line.size()) continue;
    std::size_t kw_end = k;
    while (kw_end < line.size() && std::isalpha(static_cast<unsigned char>(line[kw_end]))) ++kw_end;
    const std::string keyword = line.substr(k, kw_end - k);
    if (keyword == "gens") {
      if (have_gens) throw ParseError("duplicate 'gens' line", line_no, static_cast<int>(k) + 1);
      LineParser lp(line, line_no, kw_end, no_names);
      p.generator_names = lp.parse_name_list();
      if (p.generator_names.empty())
        throw ParseError("at least one generator required", line_no, static_cast<int>(kw_end) + 1);
      std::set<std::string> seen;
      for (const auto& n : p.generator_names)
        if (!seen.insert(n).second)
          throw ParseError("duplicate generator name '" + n + "'", line_no,
                           static_cast<int>(line.find(n, kw_end)) + 1);
      p.rank = static_cast<int>(p.generator_names.size());
      have_gens = true;
    } else if (keyword == "rels") {
      if (!have_gens) throw ParseError("'rels' before 'gens'", line_no, static_cast<int>(k) + 1);
      LineParser lp(line, line_no, kw_end, p.generator_names);
      for (auto& w : lp.parse_word_list())
        if (!w.empty()) p.relators.push_back(std::move(w));
    } else {
      throw ParseError("expected 'gens' or 'rels'", line_no, static_cast<int>(k) + 1);
    }
  }
  if (!have_gens) throw ParseError("missing 'gens' line", std::max(line_no, 1), 1);
  return p;
}

Presentation cyclically_reduced(const Presentation& p) {
  Presentation out = p;
  for (auto& r : out.relators) r = cyclically_reduce(r);
  return out;
}

}  // namespace lcs
