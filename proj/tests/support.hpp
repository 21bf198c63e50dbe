#pragma once

#include <random>
#include <vector>

#include "lcskit/bigint.hpp"
#include "lcskit/word.hpp"

namespace lcs::testing {

inline std::vector<Letter> random_letters(std::mt19937_64& rng, int rank, int max_length) {
  std::uniform_int_distribution<int> len(0, max_length), gen(1, rank), sign(0, 1);
  std::vector<Letter> out(static_cast<std::size_t>(len(rng)));
  for (auto& l : out) l = Letter{gen(rng), sign(rng) ? 1 : -1};
  return out;
}

inline Word random_word(std::mt19937_64& rng, int rank, int max_length) {
  return Word(random_letters(rng, rank, max_length));
}

// Deletes the first cancelling pair until none is left.
inline std::vector<Letter> naive_reduce(std::vector<Letter> w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i].generator == w[i + 1].generator && w[i].sign == -w[i + 1].sign) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
  }
  return w;
}

// Cancels pairs at random positions.
inline std::vector<Letter> random_order_reduce(std::vector<Letter> w, std::mt19937_64& rng) {
  while (true) {
    std::vector<std::size_t> spots;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i].generator == w[i + 1].generator && w[i].sign == -w[i + 1].sign) spots.push_back(i);
    if (spots.empty()) return w;
    const std::size_t i = spots[std::uniform_int_distribution<std::size_t>(0, spots.size() - 1)(rng)];
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
  }
}

inline std::vector<Letter> concat(std::vector<Letter> a, const std::vector<Letter>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, int max_dim, int bound) {
  std::uniform_int_distribution<int> dim(0, max_dim), entry(-bound, bound);
  const int r = dim(rng), c = dim(rng);
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = entry(rng);
  return m;
}

inline IntMatrix matrix(std::initializer_list<std::initializer_list<long>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = r ? static_cast<Eigen::Index>(rows.begin()->size()) : 0;
  IntMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

// Exact determinant by fraction-free elimination.
inline BigInt determinant(IntMatrix a) {
  const Eigen::Index n = a.rows();
  BigInt sign = 1, prev = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return 0;
    if (p != k) {
      a.row(p).swap(a.row(k));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return n == 0 ? BigInt(1) : sign * a(n - 1, n - 1);
}

}  // namespace lcs::testing
