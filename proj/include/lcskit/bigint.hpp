#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace lcs {

/// Arbitrary-precision integer used for lattice entries and exponents.
///
/// A thin value wrapper around boost's cpp_int. Wrapping (rather than
/// aliasing) keeps boost's converting constructors out of Eigen's
/// expression machinery, which otherwise fails to compile with Eigen 3.4.
class BigInt {
 public:
  using Rep = boost::multiprecision::cpp_int;

  BigInt() = default;
  BigInt(int v) : v_(v) {}
  BigInt(long v) : v_(v) {}
  BigInt(long long v) : v_(v) {}
  BigInt(unsigned long v) : v_(v) {}
  BigInt(unsigned long long v) : v_(v) {}
  explicit BigInt(Rep v) : v_(std::move(v)) {}
  explicit BigInt(const std::string& decimal) : v_(decimal) {}

  const Rep& rep() const { return v_; }

  BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
  BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
  BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }
  // Truncating division, as for built-in integers.
  BigInt& operator/=(const BigInt& o) { v_ /= o.v_; return *this; }
  BigInt& operator%=(const BigInt& o) { v_ %= o.v_; return *this; }

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
  friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
  friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }
  friend BigInt operator-(const BigInt& a) { return BigInt(Rep(-a.v_)); }

  friend bool operator==(const BigInt& a, const BigInt& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    return a.v_.compare(b.v_) <=> 0;
  }

  int sign() const { return v_.sign(); }
  bool is_zero() const { return v_.is_zero(); }
  bool fits_int64() const {
    return v_ >= std::numeric_limits<std::int64_t>::min() &&
           v_ <= std::numeric_limits<std::int64_t>::max();
  }
  /// Throws std::overflow_error when the value does not fit.
  std::int64_t to_int64() const;
  std::string str() const { return v_.str(); }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& a) { return os << a.v_; }

 private:
  Rep v_;
};

inline BigInt abs(const BigInt& a) { return a.sign() < 0 ? -a : a; }
BigInt gcd(const BigInt& a, const BigInt& b);

/// Scalar-generic helpers so that lattice templates work for both
/// machine integers and BigInt.
template <typename Scalar>
Scalar abs_value(const Scalar& a) {
  return a < Scalar(0) ? Scalar(-a) : a;
}

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<BigInt>;
using IntVector = Vector<BigInt>;

}  // namespace lcs

namespace Eigen {
template <>
struct NumTraits<lcs::BigInt> : GenericNumTraits<lcs::BigInt> {
  using Real = lcs::BigInt;
  using NonInteger = lcs::BigInt;
  using Literal = lcs::BigInt;
  using Nested = lcs::BigInt;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 16,
    MulCost = 32
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline Real highest() { return 0; }
  static inline Real lowest() { return 0; }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
