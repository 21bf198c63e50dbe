#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace lcs {

/// One letter x_g^sign of a free-group word. Generators are 1-based.
struct Letter {
  int generator = 1;
  int sign = 1;

  Letter inverse() const { return {generator, -sign}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A freely reduced word in a finitely generated free group.
///
/// Every constructor reduces its input, so a Word never contains an
/// adjacent pair x x^-1. Comparison is lexicographic on letters, which is
/// only used to make set-valued computations deterministic.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

  /// The single-letter word x_g^sign.
  static Word generator(int g, int sign = 1) { return Word({Letter{g, sign}}); }

  /// Builds from signed indices: +g is x_g, -g is x_g^-1.
  static Word from_signed(std::span<const int> letters);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  /// Largest generator index used, 0 for the empty word.
  int max_generator() const;
  /// Sum of exponents of x_g.
  std::int64_t exponent_sum(int g) const;

  Word inverse() const;
  Word& operator*=(const Word& other);
  friend Word operator*(Word a, const Word& b) { return a *= b; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                  b.letters_.begin(), b.letters_.end());
  }

 private:
  std::vector<Letter> letters_;
};

inline Word multiply(const Word& u, const Word& v) { return u * v; }
inline Word invert(const Word& u) { return u.inverse(); }

/// [u,v] = u^-1 v^-1 u v.
Word commutator(const Word& u, const Word& v);

/// Left-normed commutator [w1, w2, ..., wk] = [[w1, w2], ..., wk].
Word left_normed(std::span<const Word> entries);

/// u^k for any integer k.
Word power(const Word& u, std::int64_t k);

/// v^-1 u v.
Word conjugate(const Word& u, const Word& by);

/// Removes matching first/last letters until the word is cyclically reduced.
Word cyclically_reduce(const Word& u);

/// Renders with generator names, run-length compressed: "x^2 y^-1 x".
/// The empty word renders as "1".
std::string to_string(const Word& w, std::span<const std::string> names);

/// A finite presentation <X | A>.
struct Presentation {
  int rank = 0;
  std::vector<std::string> generator_names;
  std::vector<Word> relators;
};

/// Parses the line-oriented presentation grammar:
///
///     gens x, y
///     rels x^2, [y,x]^3, (x y)^-2
///
/// Relators are freely reduced; relators that reduce to the empty word are
/// dropped. Throws ParseError with a line/column position.
Presentation parse_presentation(const std::string& text);

/// Copy of `p` with every relator cyclically reduced.
Presentation cyclically_reduced(const Presentation& p);

}  // namespace lcs
