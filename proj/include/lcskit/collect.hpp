#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "lcskit/bigint.hpp"
#include "lcskit/hall.hpp"
#include "lcskit/word.hpp"

namespace lcs {

/// Coordinates of a word over the ordered basics of weight <= cutoff:
/// w = b_1^e_1 b_2^e_2 ... b_t^e_t modulo gamma_{cutoff+1} F, b_1 < b_2 < ...
struct ExponentVector {
  int cutoff = 0;
  IntVector coords;  // indexed by basic position, length count_up_to(cutoff)

  bool is_zero() const;
  /// Sub-vector of the weight-w coordinates.
  IntVector weight_slice(const HallBasis& basis, int w) const;
  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.cutoff == b.cutoff && a.coords.size() == b.coords.size() && a.coords == b.coords;
  }
};

struct CollectOptions {
  /// Longest intermediate word (in letters) before ResourceLimit is thrown.
  std::int64_t length_cap = 1'000'000;
};

struct CollectStats {
  std::int64_t words = 0;
  std::int64_t max_length = 0;
  std::int64_t conjugations = 0;
};

/// Hall's collection process.
///
/// Basics are collected in increasing order; when collecting c, every
/// occurrence of c^{+-1} is moved to the front using
///   a c      = c a [a,c]
///   a^-1 c   = c [a,c]^-1 a^-1
///   a c^-1   = c^-1 a a_2 a_4 ... a_3^-1 a_1^-1
///   a^-1 c^-1 = c^-1 a_1 a_3 ... a_2^-1 a^-1
/// where a_k = [a,c,...,c] (k copies of c). Commutators of weight above the
/// cutoff are dropped. All symbols still uncollected when c is reached have
/// second component <= c, so every produced bracket is again basic.
class Collector {
 public:
  Collector(int rank, int max_weight, CollectOptions options = {});
  explicit Collector(std::shared_ptr<const HallBasis> basis, CollectOptions options = {});

  const HallBasis& basis() const { return *basis_; }
  std::shared_ptr<const HallBasis> shared_basis() const { return basis_; }
  const CollectOptions& options() const { return options_; }
  void set_length_cap(std::int64_t cap) { options_.length_cap = cap; }

  /// Exponent vector of w modulo gamma_{n+1} F; n <= basis().max_weight().
  ExponentVector collect(const Word& w, int n) const;

  /// Weight-n coordinates of w, which must lie in gamma_n F. Throws
  /// NotInGamma naming the first nonzero lower-weight basic otherwise.
  IntVector weight_component(const Word& w, int n) const;

  /// The word b_1^e_1 ... b_t^e_t in increasing basic order.
  Word expand(const ExponentVector& v) const;

  const CollectStats& stats() const { return stats_; }
  void reset_stats() const { stats_ = {}; }

 private:
  std::shared_ptr<const HallBasis> basis_;
  CollectOptions options_;
  mutable CollectStats stats_;
};

/// Independent second route to the same coordinates through the Magnus
/// embedding x_i -> 1 + X_i into noncommutative integer polynomials
/// truncated above degree n. Weight by weight, the lowest homogeneous part
/// of the image is a Lie polynomial which is solved against the images of
/// the basics; their contribution is then divided out. Only practical for
/// small rank and cutoff.
class MagnusCollector {
 public:
  MagnusCollector(int rank, int max_weight);
  ~MagnusCollector();
  MagnusCollector(MagnusCollector&&) noexcept;
  MagnusCollector& operator=(MagnusCollector&&) noexcept;

  ExponentVector collect(const Word& w, int n) const;
  const HallBasis& basis() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// One-shot helpers that build a basis for (rank, n).
ExponentVector collect(const Word& w, int rank, int n);
IntVector weight_component(const Word& w, int rank, int n);

}  // namespace lcs
