#include "lcskit/bigint.hpp"

#include <stdexcept>

namespace lcs {

std::int64_t BigInt::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("BigInt value " + str() + " exceeds int64");
  return v_.convert_to<std::int64_t>();
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  return BigInt(boost::multiprecision::gcd(a.rep(), b.rep()));
}

}  // namespace lcs
