#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

#include "lcskit/collect.hpp"

namespace lcs {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// Noncommutative polynomials in X_1..X_r truncated above degree n.
// Monomials of degree k occupy [offset[k], offset[k] + r^k), digits read
// most significant first.
class SeriesSpace {
 public:
  SeriesSpace(int rank, int degree) : rank_(rank), degree_(degree) {
    offset_.push_back(0);
    std::size_t block = 1;
    for (int k = 0; k <= degree; ++k) {
      blocks_.push_back(block);
      offset_.push_back(offset_.back() + block);
      block *= static_cast<std::size_t>(rank);
    }
  }

  std::size_t size() const { return offset_.back(); }
  std::size_t offset(int k) const { return offset_[static_cast<std::size_t>(k)]; }
  std::size_t block(int k) const { return blocks_[static_cast<std::size_t>(k)]; }
  int degree() const { return degree_; }

  std::vector<BigInt> one() const {
    std::vector<BigInt> s(size());
    s[0] = 1;
    return s;
  }

  // 1 + X_g, or its inverse sum_k (-X_g)^k.
  std::vector<BigInt> letter(int g, int sign) const {
    std::vector<BigInt> s = one();
    std::size_t mono = 0;
    for (int k = 1; k <= degree_; ++k) {
      mono = mono * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(g - 1);
      if (sign > 0) {
        if (k == 1) s[offset(1) + mono] = 1;
      } else {
        s[offset(k) + mono] = (k % 2 == 0) ? 1 : -1;
      }
    }
    return s;
  }

  std::vector<BigInt> multiply(const std::vector<BigInt>& a, const std::vector<BigInt>& b) const {
    std::vector<BigInt> c(size());
    for (int i = 0; i <= degree_; ++i) {
      for (std::size_t u = 0; u < block(i); ++u) {
        const BigInt& au = a[offset(i) + u];
        if (au.is_zero()) continue;
        for (int j = 0; i + j <= degree_; ++j) {
          const std::size_t base = offset(i + j) + u * block(j);
          for (std::size_t v = 0; v < block(j); ++v) {
            const BigInt& bv = b[offset(j) + v];
            if (bv.is_zero()) continue;
            c[base + v] += au * bv;
          }
        }
      }
    }
    return c;
  }

 private:
  int rank_;
  int degree_;
  std::vector<std::size_t> offset_;
  std::vector<std::size_t> blocks_;
};

// Exact solver for A e = s where A has full column rank: a square
// subsystem on independent rows is inverted over the rationals once.
class LieSolver {
 public:
  LieSolver() = default;
  explicit LieSolver(const std::vector<std::vector<BigInt>>& columns) {
    cols_ = columns;
    const std::size_t n = columns.size();
    if (n == 0) return;
    const std::size_t m = columns[0].size();

    // Pick independent rows by elimination modulo a large prime.
    constexpr std::int64_t p = 2147483629;
    auto mod = [](const BigInt& x) {
      BigInt r = x % BigInt(p);
      std::int64_t v = r.to_int64();
      return v < 0 ? v + p : v;
    };
    auto inv_mod = [](std::int64_t a) {
      std::int64_t r = 1, e = p - 2;
      a %= p;
      while (e) {
        if (e & 1) r = static_cast<std::int64_t>((__int128)r * a % p);
        a = static_cast<std::int64_t>((__int128)a * a % p);
        e >>= 1;
      }
      return r;
    };
    std::vector<std::vector<std::int64_t>> basis_rows;  // reduced, with pivot columns
    std::vector<std::size_t> pivot_col;
    for (std::size_t r = 0; r < m && rows_.size() < n; ++r) {
      std::vector<std::int64_t> v(n);
      bool any = false;
      for (std::size_t c = 0; c < n; ++c) {
        v[c] = mod(columns[c][r]);
        any = any || v[c] != 0;
      }
      if (!any) continue;
      for (std::size_t k = 0; k < basis_rows.size(); ++k) {
        const std::int64_t f = v[pivot_col[k]];
        if (f == 0) continue;
        for (std::size_t c = 0; c < n; ++c)
          v[c] = static_cast<std::int64_t>(((__int128)v[c] - (__int128)f * basis_rows[k][c]) % p + p) % p;
      }
      std::size_t pc = n;
      for (std::size_t c = 0; c < n; ++c)
        if (v[c] != 0) {
          pc = c;
          break;
        }
      if (pc == n) continue;
      const std::int64_t inv = inv_mod(v[pc]);
      for (auto& x : v) x = static_cast<std::int64_t>((__int128)x * inv % p);
      basis_rows.push_back(std::move(v));
      pivot_col.push_back(pc);
      rows_.push_back(r);
    }
    if (rows_.size() != n) throw std::logic_error("Magnus images of basics are dependent");

    // Rational inverse of the n x n subsystem by Gauss-Jordan.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < n; ++c) a[i][c] = Rational(columns[c][rows_[i]].rep());
      a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && a[piv][col] == 0) ++piv;
      if (piv == n) throw std::logic_error("singular Magnus subsystem");
      std::swap(a[piv], a[col]);
      const Rational inv = 1 / a[col][col];
      for (auto& x : a[col]) x *= inv;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == col || a[i][col] == 0) continue;
        const Rational f = a[i][col];
        for (std::size_t c = 0; c < 2 * n; ++c) a[i][c] -= f * a[col][c];
      }
    }
    inverse_.assign(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t c = 0; c < n; ++c) inverse_[i][c] = a[i][n + c];
  }

  std::vector<BigInt> solve(const std::vector<BigInt>& rhs) const {
    const std::size_t n = cols_.size();
    std::vector<BigInt> e(n);
    for (std::size_t i = 0; i < n; ++i) {
      Rational acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += inverse_[i][k] * Rational(rhs[rows_[k]].rep());
      if (denominator(acc) != 1) throw std::logic_error("non-integral Lie coordinates");
      e[i] = BigInt(numerator(acc));
    }
    for (std::size_t r = 0; r < rhs.size(); ++r) {
      BigInt acc = 0;
      for (std::size_t c = 0; c < n; ++c) acc += cols_[c][r] * e[c];
      if (!(acc == rhs[r])) throw std::logic_error("homogeneous part is not a Lie element");
    }
    return e;
  }

 private:
  std::vector<std::vector<BigInt>> cols_;
  std::vector<std::size_t> rows_;
  std::vector<std::vector<Rational>> inverse_;
};

}  // namespace

struct MagnusCollector::Impl {
  HallBasis basis;
  SeriesSpace space;
  std::vector<std::vector<BigInt>> image;      // M(b)
  std::vector<std::vector<BigInt>> inv_image;  // M(b)^-1
  std::vector<LieSolver> solvers;              // per weight

  Impl(int rank, int max_weight) : basis(rank, max_weight), space(rank, max_weight) {
    image.reserve(static_cast<std::size_t>(basis.size()));
    inv_image.reserve(static_cast<std::size_t>(basis.size()));
    for (int i = 0; i < basis.size(); ++i) {
      const auto& b = basis[i];
      if (b.is_leaf()) {
        image.push_back(space.letter(b.generator, 1));
        inv_image.push_back(space.letter(b.generator, -1));
      } else {
        const auto& u = image[static_cast<std::size_t>(b.left)];
        const auto& v = image[static_cast<std::size_t>(b.right)];
        const auto& ui = inv_image[static_cast<std::size_t>(b.left)];
        const auto& vi = inv_image[static_cast<std::size_t>(b.right)];
        image.push_back(space.multiply(space.multiply(ui, vi), space.multiply(u, v)));
        inv_image.push_back(space.multiply(space.multiply(vi, ui), space.multiply(v, u)));
      }
    }
    solvers.resize(static_cast<std::size_t>(max_weight) + 1);
    for (int w = 1; w <= max_weight; ++w) {
      std::vector<std::vector<BigInt>> cols;
      for (int i = basis.weight_begin(w); i < basis.weight_end(w); ++i) {
        const auto& img = image[static_cast<std::size_t>(i)];
        cols.emplace_back(img.begin() + static_cast<std::ptrdiff_t>(space.offset(w)),
                          img.begin() + static_cast<std::ptrdiff_t>(space.offset(w) + space.block(w)));
      }
      solvers[static_cast<std::size_t>(w)] = LieSolver(cols);
    }
  }
};

MagnusCollector::MagnusCollector(int rank, int max_weight)
    : impl_(std::make_unique<Impl>(rank, max_weight)) {}
MagnusCollector::~MagnusCollector() = default;
MagnusCollector::MagnusCollector(MagnusCollector&&) noexcept = default;
MagnusCollector& MagnusCollector::operator=(MagnusCollector&&) noexcept = default;

const HallBasis& MagnusCollector::basis() const { return impl_->basis; }

ExponentVector MagnusCollector::collect(const Word& w, int n) const {
  const Impl& m = *impl_;
  if (n < 1 || n > m.basis.max_weight())
    throw std::invalid_argument("MagnusCollector: cutoff " + std::to_string(n) + " out of range");
  if (w.max_generator() > m.basis.rank())
    throw std::invalid_argument("MagnusCollector: word uses a generator beyond rank");

  std::vector<BigInt> s = m.space.one();
  for (const auto& l : w.letters()) s = m.space.multiply(s, m.space.letter(l.generator, l.sign));

  ExponentVector out;
  out.cutoff = n;
  out.coords = IntVector::Zero(m.basis.count_up_to(n));
  for (int k = 1; k <= n; ++k) {
    // Lower degrees of s - 1 vanish here; degree k is a Lie polynomial.
    std::vector<BigInt> part(s.begin() + static_cast<std::ptrdiff_t>(m.space.offset(k)),
                             s.begin() + static_cast<std::ptrdiff_t>(m.space.offset(k) + m.space.block(k)));
    const std::vector<BigInt> e = m.solvers[static_cast<std::size_t>(k)].solve(part);
    // s <- (prod_b M(b)^e_b)^-1 s, the product taken in increasing order.
    const int first = m.basis.weight_begin(k);
    for (int j = 0; j < static_cast<int>(e.size()); ++j) {
      const BigInt& ej = e[static_cast<std::size_t>(j)];
      out.coords[first + j] = ej;
      if (ej.is_zero()) continue;
      const auto& factor = ej.sign() > 0 ? m.inv_image[static_cast<std::size_t>(first + j)]
                                         : m.image[static_cast<std::size_t>(first + j)];
      const std::int64_t reps = abs(ej).to_int64();
      for (std::int64_t r = 0; r < reps; ++r) s = m.space.multiply(factor, s);
    }
  }
  return out;
}

}  // namespace lcs
