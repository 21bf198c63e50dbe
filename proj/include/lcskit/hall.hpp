#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "lcskit/bigint.hpp"
#include "lcskit/word.hpp"

namespace lcs {

/// A basic commutator stored as a node of a HallBasis table.
///
/// Leaves are the free generators; nodes [left, right] refer to other
/// entries by their position in the global order.
struct BasicCommutator {
  int index = 0;
  int weight = 1;
  int generator = 0;  // leaves only, 1-based
  int left = -1;      // nodes only
  int right = -1;     // nodes only

  bool is_leaf() const { return left < 0; }
};

/// All basic commutators of weight <= max_weight on `rank` generators,
/// sorted by the global total order: weight first, then (left, right) by
/// position, leaves by generator index. Every node [b,c] has b > c and, when
/// b = [d,e], e <= c.
class HallBasis {
 public:
  HallBasis(int rank, int max_weight);

  int rank() const { return rank_; }
  int max_weight() const { return max_weight_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  const BasicCommutator& operator[](int i) const { return nodes_[static_cast<std::size_t>(i)]; }
  std::span<const BasicCommutator> all() const { return nodes_; }

  /// Positions [first, last) of the weight-w entries.
  int weight_begin(int w) const { return weight_start_[static_cast<std::size_t>(w)]; }
  int weight_end(int w) const { return weight_start_[static_cast<std::size_t>(w) + 1]; }
  int count(int w) const { return weight_end(w) - weight_begin(w); }
  /// Number of basics of weight <= w.
  int count_up_to(int w) const { return weight_end(w); }

  /// Position of [a,b] when it is basic and within max_weight, else -1.
  int bracket(int a, int b) const;

  /// The commutator as a free-group word ([u,v] = u^-1 v^-1 u v).
  const Word& word(int i) const { return words_[static_cast<std::size_t>(i)]; }

  /// Nested-bracket rendering with generator names, e.g. "[[y,x],x]".
  std::string render(int i, std::span<const std::string> names = {}) const;

  /// Leaf generator indices read left to right.
  std::vector<int> foliage(int i) const;

 private:
  int rank_;
  int max_weight_;
  std::vector<BasicCommutator> nodes_;
  std::vector<int> weight_start_;
  std::vector<Word> words_;
  std::unordered_map<std::uint64_t, int> bracket_index_;
};

/// The ordered list of basic commutators up to max_weight.
inline HallBasis generate_basic(int rank, int max_weight) { return HallBasis(rank, max_weight); }

/// Necklace count (1/n) sum_{d|n} mu(d) rank^(n/d).
BigInt witt_rank(int rank, int weight);

// ---------------------------------------------------------------------------
// Shapes

/// A commutator tree with generator identities erased.
struct ShapeTerm {
  int atom_weight = 1;              // used when children is empty
  std::vector<ShapeTerm> children;  // a bracket when non-empty

  static ShapeTerm atom(int weight = 1) { return ShapeTerm{weight, {}}; }
  static ShapeTerm bracket(std::vector<ShapeTerm> parts) { return ShapeTerm{0, std::move(parts)}; }

  bool is_atom() const { return children.empty(); }
  int weight() const;
  friend bool operator==(const ShapeTerm&, const ShapeTerm&) = default;
};

ShapeTerm shape(const HallBasis& basis, int index);

/// Tree rendering with dots for atoms, e.g. "[[.,.],.]".
std::string to_string(const ShapeTerm& s);
/// Outer signature listing the weights of the top-level parts, "[[2],[1]]".
std::string signature(const ShapeTerm& s);

/// The sequence (n1, ..., nm) naming gamma_{n1} gamma_{n2} ... gamma_{nm} F.
class VarietySpec {
 public:
  /// Throws std::invalid_argument unless nonempty with every entry >= 2.
  explicit VarietySpec(std::vector<int> sequence);
  VarietySpec(std::initializer_list<int> sequence) : VarietySpec(std::vector<int>(sequence)) {}

  std::span<const int> sequence() const { return seq_; }
  std::size_t depth() const { return seq_.size(); }
  std::string str() const;
  friend bool operator==(const VarietySpec&, const VarietySpec&) = default;

 private:
  std::vector<int> seq_;
};

/// Decides shape membership of basic commutators in a polynilpotent term.
///
/// For a suffix W of the variety, deg_W(t) is the largest k with the
/// erased tree t inside gamma_k(W):
///   deg_F(t) = weight(t)
///   deg_W(leaf) = [leaf in W]
///   deg_W([a,b]) = max([t in W], deg_W(a) + deg_W(b), deg_W(a), deg_W(b))
/// where the sum only counts when both sides lie in W, and t lies in
/// gamma_{n1} W iff deg_W(t) >= n1. Results are memoized per (basic, suffix).
class ShapeClassifier {
 public:
  ShapeClassifier(const HallBasis& basis, VarietySpec variety);

  bool contains(int index) const;
  const VarietySpec& variety() const { return variety_; }

 private:
  int degree(int index, std::size_t suffix) const;
  bool in_suffix(int index, std::size_t suffix) const;

  const HallBasis& basis_;
  VarietySpec variety_;
  mutable std::vector<std::vector<int>> memo_;
};

bool shape_in_variety(const HallBasis& basis, int index, const VarietySpec& v);

/// Weight-w basics whose shape is not in the variety, in global order. These
/// freely generate gamma_w / gamma_{w+1} of the free polynilpotent group.
std::vector<int> basis_mod_variety(const HallBasis& basis, int weight, const VarietySpec& v);

/// Weight-w basics whose shape lies in the variety: a basis of the variety's
/// intersection with gamma_w, modulo gamma_{w+1}.
std::vector<int> intersection_basis(const HallBasis& basis, int weight, const VarietySpec& v);

/// Left-normed basics [x_i1, ..., x_in] with i1 > i2 <= i3 <= ... <= in.
std::vector<int> simple_basics(const HallBasis& basis, int weight);

}  // namespace lcs
