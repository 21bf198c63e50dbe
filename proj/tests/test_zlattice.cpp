#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "lcskit/oracle.hpp"
#include "lcskit/smith.hpp"
#include "support.hpp"

using namespace lcs;
using lcs::testing::determinant;
using lcs::testing::matrix;

namespace {

bool is_diagonal_chain(const IntMatrix& d) {
  for (Eigen::Index i = 0; i < d.rows(); ++i)
    for (Eigen::Index j = 0; j < d.cols(); ++j)
      if (i != j && !d(i, j).is_zero()) return false;
  const Eigen::Index k = std::min(d.rows(), d.cols());
  for (Eigen::Index i = 0; i < k; ++i) {
    if (d(i, i) < BigInt(0)) return false;
    if (i + 1 < k) {
      if (d(i, i).is_zero() && !d(i + 1, i + 1).is_zero()) return false;
      if (!d(i, i).is_zero() && !(d(i + 1, i + 1) % d(i, i)).is_zero()) return false;
    }
  }
  return true;
}

void check_contract(const IntMatrix& a, PivotStrategy s) {
  const auto r = smith_normal_form(a, s);
  CHECK(IntMatrix(r.U * a * r.V) == r.D);
  CHECK(abs(determinant(r.U)) == BigInt(1));
  CHECK(abs(determinant(r.V)) == BigInt(1));
  CHECK(is_diagonal_chain(r.D));
}

AbelianInvariants ab(std::vector<long> torsion, int free_rank) {
  AbelianInvariants a;
  for (long t : torsion) a.torsion.emplace_back(t);
  a.free_rank = free_rank;
  return a;
}

}  // namespace

TEST_CASE("smith normal form examples") {
  CHECK(smith_normal_form(matrix({{1, 0}, {0, 1}})).D == matrix({{1, 0}, {0, 1}}));
  CHECK(smith_normal_form(matrix({{2, 4}, {6, 8}})).D == matrix({{2, 0}, {0, 4}}));
  const auto z = smith_normal_form(matrix({{0, 0}, {0, 0}}));
  CHECK(z.D == matrix({{0, 0}, {0, 0}}));
  CHECK(z.U == matrix({{1, 0}, {0, 1}}));
  CHECK(z.V == matrix({{1, 0}, {0, 1}}));
  CHECK(smith_normal_form(matrix({{2, 0, 0}, {0, 3, 0}})).D == matrix({{1, 0, 0}, {0, 6, 0}}));
  const IntMatrix empty(0, 3);
  const auto e = smith_normal_form(empty);
  CHECK(e.D.rows() == 0);
  CHECK(e.V == IntMatrix::Identity(3, 3));
}

TEST_CASE("works with machine integers too") {
  Matrix<long> a(2, 2);
  a << 2, 4, 6, 8;
  const auto r = smith_normal_form(a, PivotStrategy::GcdCombination);
  CHECK(r.invariants() == std::vector<long>{2, 4});
}

TEST_CASE("abelian quotient examples") {
  CHECK(abelian_quotient(2, matrix({{1, 0}, {0, 1}})).is_trivial());
  CHECK(abelian_quotient(2, IntMatrix(0, 2)) == ab({}, 2));
  CHECK(abelian_quotient(1, matrix({{2}})) == ab({2}, 0));
  CHECK(abelian_quotient(3, matrix({{2, 0, 0}, {0, 3, 0}})) == ab({6}, 1));
  CHECK(abelian_quotient(2, matrix({{0, 0}, {4, 0}, {0, 0}})) == ab({4}, 1));
  CHECK_THROWS_AS(abelian_quotient(3, matrix({{1, 0}})), std::invalid_argument);
}

TEST_CASE("Z^3 / <(2,0,0),(0,3,0)> by coset enumeration") {
  // The third coordinate is untouched, so the quotient is (Z^2 / L) x Z. Enumerate the cosets
  // of L = <(2,0),(0,3)> in a box and take element orders.
  auto in_lattice = [](long a, long b) { return a % 2 == 0 && b % 3 == 0; };
  std::set<std::pair<long, long>> reps;
  for (long a = -6; a <= 6; ++a)
    for (long b = -6; b <= 6; ++b) reps.insert({((a % 2) + 2) % 2, ((b % 3) + 3) % 3});
  CHECK(reps.size() == 6);
  std::vector<std::int64_t> orders;
  for (const auto& [a, b] : reps) {
    std::int64_t k = 1;
    while (!in_lattice(k * a, k * b)) ++k;
    orders.push_back(k);
  }
  AbelianInvariants brute = invariants_from_orders(orders);
  brute.free_rank += 1;
  CHECK(brute == abelian_quotient(3, matrix({{2, 0, 0}, {0, 3, 0}})));
  CHECK(brute == ab({6}, 1));
}

TEST_CASE("contract on random matrices") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 250; ++t) {
    const IntMatrix a = lcs::testing::random_matrix(rng, 6, 20);
    check_contract(a, PivotStrategy::SmallestEntry);
    check_contract(a, PivotStrategy::GcdCombination);
    CHECK(smith_normal_form(a, PivotStrategy::SmallestEntry).D ==
          smith_normal_form(a, PivotStrategy::GcdCombination).D);
  }
}

TEST_CASE("quotient is invariant under row operations") {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<int> k(-3, 3);
  for (int t = 0; t < 100; ++t) {
    IntMatrix a = lcs::testing::random_matrix(rng, 5, 9);
    if (a.rows() < 2) continue;
    const AbelianInvariants base = abelian_quotient(static_cast<int>(a.cols()), a);
    IntMatrix b = a;
    b.row(0).swap(b.row(1));
    b.row(1) = -b.row(1);
    b.row(0) += BigInt(k(rng)) * b.row(1);
    CHECK(abelian_quotient(static_cast<int>(b.cols()), b) == base);
  }
}

TEST_CASE("torsion product equals |det| for square full rank") {
  std::mt19937_64 rng(33);
  std::uniform_int_distribution<int> e(-9, 9);
  for (int t = 0; t < 100; ++t) {
    IntMatrix a(4, 4);
    for (Eigen::Index i = 0; i < 4; ++i)
      for (Eigen::Index j = 0; j < 4; ++j) a(i, j) = e(rng);
    const BigInt det = determinant(a);
    if (det.is_zero()) continue;
    const AbelianInvariants q = abelian_quotient(4, a);
    BigInt prod = 1;
    for (const auto& x : q.torsion) prod = prod * x;
    CHECK(prod == abs(det));
    CHECK(q.free_rank == 0);
  }
}

TEST_CASE("tensoring with Z/N") {
  CHECK(tensor_mod(ab({2, 4}, 1), BigInt(12)) == ab({2, 4, 12}, 0));
  CHECK(tensor_mod(ab({3}, 2), BigInt(2)) == ab({2, 2}, 0));
  CHECK(tensor_mod(ab({3}, 2), BigInt(0)) == ab({3}, 2));
}

TEST_CASE("text form round trips") {
  for (const auto& a : {ab({}, 0), ab({}, 1), ab({}, 3), ab({2, 2}, 0), ab({6}, 1), ab({2, 4}, 2)})
    CHECK(parse_abelian_invariants(to_string(a)) == a);
  CHECK(to_string(ab({}, 0)) == "1");
  CHECK(to_string(ab({}, 2)) == "Z^2");
  CHECK(to_string(ab({2, 2}, 0)) == "Z/2 x Z/2");
  CHECK(to_string(ab({6}, 1)) == "Z/6 x Z");
  CHECK_THROWS_AS(parse_abelian_invariants("Z/3 x Z/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_abelian_invariants("Q"), std::invalid_argument);
}
