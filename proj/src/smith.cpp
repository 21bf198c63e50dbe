#include "lcskit/smith.hpp"

#include <regex>
#include <sstream>
#include <stdexcept>

namespace lcs {

AbelianInvariants abelian_quotient(int ambient_rank, const IntMatrix& sublattice_rows) {
  if (sublattice_rows.rows() > 0 && sublattice_rows.cols() != ambient_rank)
    throw std::invalid_argument("abelian_quotient: sublattice has " +
                                std::to_string(sublattice_rows.cols()) + " columns, expected " +
                                std::to_string(ambient_rank));
  // Zero rows do not change the span.
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < sublattice_rows.rows(); ++i) {
    bool zero = true;
    for (Eigen::Index j = 0; j < sublattice_rows.cols() && zero; ++j)
      zero = sublattice_rows(i, j).is_zero();
    if (!zero) keep.push_back(i);
  }
  IntMatrix rows(static_cast<Eigen::Index>(keep.size()), ambient_rank);
  for (std::size_t k = 0; k < keep.size(); ++k) rows.row(static_cast<Eigen::Index>(k)) = sublattice_rows.row(keep[k]);

  AbelianInvariants out;
  const auto snf = smith_normal_form(rows);
  const auto d = snf.invariants();
  for (const auto& x : d)
    if (x > BigInt(1)) out.torsion.push_back(x);
  out.free_rank = ambient_rank - static_cast<int>(d.size());
  return out;
}

AbelianInvariants abelian_from_cyclic_orders(const std::vector<BigInt>& orders) {
  const int k = static_cast<int>(orders.size());
  IntMatrix diag = IntMatrix::Zero(k, k);
  for (int i = 0; i < k; ++i) diag(i, i) = orders[static_cast<std::size_t>(i)];
  return abelian_quotient(k, diag);
}

AbelianInvariants tensor_mod(const AbelianInvariants& a, const BigInt& modulus) {
  if (modulus.is_zero()) return a;
  std::vector<BigInt> orders;
  for (const auto& t : a.torsion) orders.push_back(gcd(t, modulus));
  for (int i = 0; i < a.free_rank; ++i) orders.push_back(abs(modulus));
  return abelian_from_cyclic_orders(orders);
}

std::string to_string(const AbelianInvariants& a) {
  if (a.is_trivial()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : a.torsion) {
    os << (first ? "" : " x ") << "Z/" << t;
    first = false;
  }
  if (a.free_rank > 0) {
    os << (first ? "" : " x ") << "Z";
    if (a.free_rank > 1) os << '^' << a.free_rank;
  }
  return os.str();
}

AbelianInvariants parse_abelian_invariants(const std::string& text) {
  static const std::regex torsion_re(R"(\s*Z/(\d+)\s*)");
  static const std::regex free_re(R"(\s*Z(?:\^(\d+))?\s*)");
  static const std::regex trivial_re(R"(\s*1\s*)");
  AbelianInvariants out;
  if (std::regex_match(text, trivial_re)) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t sep = text.find(" x ", start);
    const std::string part = text.substr(start, sep == std::string::npos ? std::string::npos : sep - start);
    std::smatch m;
    if (std::regex_match(part, m, torsion_re)) {
      if (out.free_rank > 0) throw std::invalid_argument("torsion after free part: " + text);
      out.torsion.emplace_back(m[1].str());
    } else if (std::regex_match(part, m, free_re)) {
      if (out.free_rank > 0) throw std::invalid_argument("repeated free part: " + text);
      out.free_rank = m[1].matched ? std::stoi(m[1].str()) : 1;
    } else {
      throw std::invalid_argument("malformed abelian group: " + text);
    }
    if (sep == std::string::npos) break;
    start = sep + 3;
  }
  for (std::size_t i = 0; i < out.torsion.size(); ++i) {
    if (out.torsion[i] < BigInt(2)) throw std::invalid_argument("torsion entry below 2: " + text);
    if (i && !(out.torsion[i] % out.torsion[i - 1]).is_zero())
      throw std::invalid_argument("torsion not a divisibility chain: " + text);
  }
  return out;
}

}  // namespace lcs
