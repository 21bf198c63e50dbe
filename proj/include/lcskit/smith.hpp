#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "lcskit/bigint.hpp"

namespace lcs {

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ...,
/// d_i >= 0 and zeros last.
template <typename Scalar>
struct SnfResult {
  Matrix<Scalar> U;
  Matrix<Scalar> D;
  Matrix<Scalar> V;

  /// Nonzero diagonal entries, in order.
  std::vector<Scalar> invariants() const {
    std::vector<Scalar> out;
    for (Eigen::Index i = 0; i < std::min(D.rows(), D.cols()); ++i)
      if (!(D(i, i) == Scalar(0))) out.push_back(D(i, i));
    return out;
  }
  Eigen::Index rank() const { return static_cast<Eigen::Index>(invariants().size()); }
};

enum class PivotStrategy {
  /// Smallest nonzero absolute value, ties by lowest (row, col).
  SmallestEntry,
  /// First nonzero entry, cleared with extended-gcd 2x2 combinations.
  GcdCombination,
};

namespace detail {

template <typename Scalar>
struct SnfState {
  Matrix<Scalar> U, D, V;

  void swap_rows(Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    D.row(a).swap(D.row(b));
    U.row(a).swap(U.row(b));
  }
  void swap_cols(Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    D.col(a).swap(D.col(b));
    V.col(a).swap(V.col(b));
  }
  // row_i -= q row_t
  void sub_row(Eigen::Index i, Eigen::Index t, const Scalar& q) {
    D.row(i) -= q * D.row(t);
    U.row(i) -= q * U.row(t);
  }
  void sub_col(Eigen::Index j, Eigen::Index t, const Scalar& q) {
    D.col(j) -= q * D.col(t);
    V.col(j) -= q * V.col(t);
  }
  void negate_row(Eigen::Index i) {
    D.row(i) = -D.row(i);
    U.row(i) = -U.row(i);
  }
  // Rows (t, i) <- [[s, u], [-b/g, a/g]] (t, i): unimodular since s a + u b = g.
  void combine_rows(Eigen::Index t, Eigen::Index i, const Scalar& s, const Scalar& u,
                    const Scalar& p, const Scalar& q) {
    Matrix<Scalar> dt = s * D.row(t) + u * D.row(i);
    Matrix<Scalar> di = p * D.row(t) + q * D.row(i);
    D.row(t) = dt;
    D.row(i) = di;
    Matrix<Scalar> ut = s * U.row(t) + u * U.row(i);
    Matrix<Scalar> ui = p * U.row(t) + q * U.row(i);
    U.row(t) = ut;
    U.row(i) = ui;
  }
  void combine_cols(Eigen::Index t, Eigen::Index j, const Scalar& s, const Scalar& u,
                    const Scalar& p, const Scalar& q) {
    Matrix<Scalar> dt = s * D.col(t) + u * D.col(j);
    Matrix<Scalar> dj = p * D.col(t) + q * D.col(j);
    D.col(t) = dt;
    D.col(j) = dj;
    Matrix<Scalar> vt = s * V.col(t) + u * V.col(j);
    Matrix<Scalar> vj = p * V.col(t) + q * V.col(j);
    V.col(t) = vt;
    V.col(j) = vj;
  }
};

// Extended gcd with g >= 0 and s a + t b = g.
template <typename Scalar>
void extended_gcd(const Scalar& a, const Scalar& b, Scalar& g, Scalar& s, Scalar& t) {
  Scalar r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (!(r1 == Scalar(0))) {
    const Scalar q = r0 / r1;
    Scalar tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 < Scalar(0)) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  g = r0;
  s = s0;
  t = t0;
}

template <typename Scalar>
bool find_smallest(const Matrix<Scalar>& D, Eigen::Index t, Eigen::Index& pr, Eigen::Index& pc) {
  bool found = false;
  Scalar best = 0;
  for (Eigen::Index i = t; i < D.rows(); ++i) {
    for (Eigen::Index j = t; j < D.cols(); ++j) {
      if (D(i, j) == Scalar(0)) continue;
      const Scalar a = abs_value(D(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        pr = i;
        pc = j;
      }
    }
  }
  return found;
}

template <typename Scalar>
bool find_first(const Matrix<Scalar>& D, Eigen::Index t, Eigen::Index& pr, Eigen::Index& pc) {
  for (Eigen::Index j = t; j < D.cols(); ++j)
    for (Eigen::Index i = t; i < D.rows(); ++i)
      if (!(D(i, j) == Scalar(0))) {
        pr = i;
        pc = j;
        return true;
      }
  return false;
}

// Clears row and column t by Euclidean steps on the smallest entry.
template <typename Scalar>
void clear_smallest(SnfState<Scalar>& st, Eigen::Index t) {
  auto& D = st.D;
  while (true) {
    bool dirty = false;
    for (Eigen::Index i = t + 1; i < D.rows(); ++i) {
      if (D(i, t) == Scalar(0)) continue;
      st.sub_row(i, t, D(i, t) / D(t, t));
      if (!(D(i, t) == Scalar(0))) dirty = true;
    }
    for (Eigen::Index j = t + 1; j < D.cols(); ++j) {
      if (D(t, j) == Scalar(0)) continue;
      st.sub_col(j, t, D(t, j) / D(t, t));
      if (!(D(t, j) == Scalar(0))) dirty = true;
    }
    if (!dirty) return;
    // A remainder survived: move the smallest entry of row/column t to the pivot.
    Eigen::Index br = t, bc = t;
    Scalar best = abs_value(D(t, t));
    for (Eigen::Index i = t + 1; i < D.rows(); ++i)
      if (!(D(i, t) == Scalar(0)) && abs_value(D(i, t)) < best) {
        best = abs_value(D(i, t));
        br = i;
        bc = t;
      }
    for (Eigen::Index j = t + 1; j < D.cols(); ++j)
      if (!(D(t, j) == Scalar(0)) && abs_value(D(t, j)) < best) {
        best = abs_value(D(t, j));
        br = t;
        bc = j;
      }
    st.swap_rows(t, br);
    st.swap_cols(t, bc);
  }
}

// Clears row and column t with gcd combinations; the pivot becomes the gcd.
template <typename Scalar>
void clear_gcd(SnfState<Scalar>& st, Eigen::Index t) {
  auto& D = st.D;
  while (true) {
    for (Eigen::Index i = t + 1; i < D.rows(); ++i) {
      if (D(i, t) == Scalar(0)) continue;
      const Scalar a = D(t, t), b = D(i, t);
      if (b % a == Scalar(0)) {
        st.sub_row(i, t, Scalar(b / a));
        continue;
      }
      Scalar g, s, u;
      extended_gcd(a, b, g, s, u);
      st.combine_rows(t, i, s, u, Scalar(-b / g), Scalar(a / g));
    }
    bool dirty = false;
    for (Eigen::Index j = t + 1; j < D.cols(); ++j) {
      if (D(t, j) == Scalar(0)) continue;
      const Scalar a = D(t, t), b = D(t, j);
      if (b % a == Scalar(0)) {
        st.sub_col(j, t, Scalar(b / a));
        continue;
      }
      Scalar g, s, u;
      extended_gcd(a, b, g, s, u);
      st.combine_cols(t, j, s, u, Scalar(-b / g), Scalar(a / g));
      dirty = true;
    }
    if (!dirty) return;
    // Column operations may have refilled column t.
    bool column_clean = true;
    for (Eigen::Index i = t + 1; i < D.rows(); ++i)
      if (!(D(i, t) == Scalar(0))) column_clean = false;
    if (column_clean) return;
  }
}

}  // namespace detail

/// Smith normal form by unimodular row and column operations.
template <typename Scalar>
SnfResult<Scalar> smith_normal_form(const Matrix<Scalar>& A,
                                    PivotStrategy strategy = PivotStrategy::SmallestEntry) {
  detail::SnfState<Scalar> st{Matrix<Scalar>::Identity(A.rows(), A.rows()), A,
                              Matrix<Scalar>::Identity(A.cols(), A.cols())};
  auto& D = st.D;
  const Eigen::Index limit = std::min(A.rows(), A.cols());
  for (Eigen::Index t = 0; t < limit; ++t) {
    while (true) {
      Eigen::Index pr = t, pc = t;
      const bool found = strategy == PivotStrategy::SmallestEntry ? detail::find_smallest(D, t, pr, pc)
                                                                  : detail::find_first(D, t, pr, pc);
      if (!found) return {std::move(st.U), std::move(st.D), std::move(st.V)};
      st.swap_rows(t, pr);
      st.swap_cols(t, pc);
      if (strategy == PivotStrategy::SmallestEntry)
        detail::clear_smallest(st, t);
      else
        detail::clear_gcd(st, t);

      // The pivot must divide the rest of the matrix; otherwise fold the
      // offending row into row t and clear again.
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < D.rows() && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < D.cols(); ++j)
          if (!(D(i, j) % D(t, t) == Scalar(0))) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      st.sub_row(t, bad, Scalar(-1));
    }
    if (D(t, t) < Scalar(0)) st.negate_row(t);
  }
  return {std::move(st.U), std::move(st.D), std::move(st.V)};
}

/// Isomorphism type of a finitely generated abelian group:
/// Z/t_1 x ... x Z/t_k x Z^free_rank with 2 <= t_1 | t_2 | ... | t_k.
struct AbelianInvariants {
  std::vector<BigInt> torsion;
  int free_rank = 0;

  bool is_trivial() const { return torsion.empty() && free_rank == 0; }
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Z^ambient_rank modulo the row span of `sublattice_rows`.
/// Throws std::invalid_argument when the column count differs from ambient_rank.
AbelianInvariants abelian_quotient(int ambient_rank, const IntMatrix& sublattice_rows);

/// Invariants of Z/orders[0] x Z/orders[1] x ..., where an order of 0 means Z.
AbelianInvariants abelian_from_cyclic_orders(const std::vector<BigInt>& orders);

/// The group tensored with Z/modulus; modulus 0 leaves it unchanged.
AbelianInvariants tensor_mod(const AbelianInvariants& a, const BigInt& modulus);

/// Canonical text form: "1", "Z", "Z^3", "Z/2 x Z/4 x Z^2".
std::string to_string(const AbelianInvariants& a);

/// Inverse of to_string; throws std::invalid_argument on malformed text.
AbelianInvariants parse_abelian_invariants(const std::string& text);

}  // namespace lcs
