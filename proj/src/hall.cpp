#include "lcskit/hall.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace lcs {

namespace {

std::uint64_t pair_key(int a, int b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

}  // namespace

HallBasis::HallBasis(int rank, int max_weight) : rank_(rank), max_weight_(max_weight) {
  if (rank < 1) throw std::invalid_argument("HallBasis: rank must be >= 1");
  if (max_weight < 1) throw std::invalid_argument("HallBasis: max_weight must be >= 1");

  weight_start_.assign(static_cast<std::size_t>(max_weight) + 2, 0);
  weight_start_[1] = 0;
  for (int g = 1; g <= rank; ++g) {
    nodes_.push_back(BasicCommutator{g - 1, 1, g, -1, -1});
    words_.push_back(Word::generator(g));
  }
  weight_start_[2] = rank;

  for (int w = 2; w <= max_weight; ++w) {
    std::vector<std::pair<int, int>> pairs;
    // [b,c] with weight(b) + weight(c) = w and b > c forces weight(b) >= weight(c).
    for (int wb = w - 1; 2 * wb >= w; --wb) {
      const int wc = w - wb;
      for (int b = weight_begin(wb); b < weight_end(wb); ++b) {
        const auto& nb = nodes_[static_cast<std::size_t>(b)];
        for (int c = weight_begin(wc); c < weight_end(wc) && c < b; ++c) {
          if (!nb.is_leaf() && nb.right > c) continue;
          pairs.emplace_back(b, c);
        }
      }
    }
    std::sort(pairs.begin(), pairs.end());
    for (const auto& [b, c] : pairs) {
      const int idx = static_cast<int>(nodes_.size());
      nodes_.push_back(BasicCommutator{idx, w, 0, b, c});
      words_.push_back(commutator(words_[static_cast<std::size_t>(b)],
                                  words_[static_cast<std::size_t>(c)]));
      bracket_index_.emplace(pair_key(b, c), idx);
    }
    weight_start_[static_cast<std::size_t>(w) + 1] = static_cast<int>(nodes_.size());
  }
}

int HallBasis::bracket(int a, int b) const {
  auto it = bracket_index_.find(pair_key(a, b));
  return it == bracket_index_.end() ? -1 : it->second;
}

std::string HallBasis::render(int i, std::span<const std::string> names) const {
  const auto& n = (*this)[i];
  if (n.is_leaf()) {
    if (static_cast<std::size_t>(n.generator) <= names.size())
      return names[static_cast<std::size_t>(n.generator - 1)];
    return "x" + std::to_string(n.generator);
  }
  return "[" + render(n.left, names) + "," + render(n.right, names) + "]";
}

std::vector<int> HallBasis::foliage(int i) const {
  std::vector<int> out;
  std::function<void(int)> walk = [&](int k) {
    const auto& n = (*this)[k];
    if (n.is_leaf()) {
      out.push_back(n.generator);
    } else {
      walk(n.left);
      walk(n.right);
    }
  };
  walk(i);
  return out;
}

BigInt witt_rank(int rank, int weight) {
  if (rank < 1 || weight < 1) throw std::invalid_argument("witt_rank: arguments must be >= 1");
  auto mobius = [](int d) {
    int result = 1;
    for (int p = 2; p * p <= d; ++p) {
      if (d % p == 0) {
        d /= p;
        if (d % p == 0) return 0;
        result = -result;
      }
    }
    if (d > 1) result = -result;
    return result;
  };
  BigInt sum = 0;
  for (int d = 1; d <= weight; ++d) {
    if (weight % d != 0) continue;
    const int mu = mobius(d);
    if (mu == 0) continue;
    BigInt term = 1;
    for (int k = 0; k < weight / d; ++k) term *= BigInt(rank);
    sum += mu > 0 ? term : -term;
  }
  return sum / BigInt(weight);
}

// ---------------------------------------------------------------------------

int ShapeTerm::weight() const {
  if (is_atom()) return atom_weight;
  int w = 0;
  for (const auto& c : children) w += c.weight();
  return w;
}

ShapeTerm shape(const HallBasis& basis, int index) {
  const auto& n = basis[index];
  if (n.is_leaf()) return ShapeTerm::atom(1);
  return ShapeTerm::bracket({shape(basis, n.left), shape(basis, n.right)});
}

std::string to_string(const ShapeTerm& s) {
  if (s.is_atom()) return s.atom_weight == 1 ? "." : "<" + std::to_string(s.atom_weight) + ">";
  std::string out = "[";
  for (std::size_t i = 0; i < s.children.size(); ++i) {
    if (i) out += ",";
    out += to_string(s.children[i]);
  }
  return out + "]";
}

std::string signature(const ShapeTerm& s) {
  if (s.is_atom()) return "[" + std::to_string(s.atom_weight) + "]";
  std::string out = "[";
  for (std::size_t i = 0; i < s.children.size(); ++i) {
    if (i) out += ",";
    out += "[" + std::to_string(s.children[i].weight()) + "]";
  }
  return out + "]";
}

VarietySpec::VarietySpec(std::vector<int> sequence) : seq_(std::move(sequence)) {
  if (seq_.empty()) throw std::invalid_argument("VarietySpec: empty sequence");
  for (int n : seq_)
    if (n < 2) throw std::invalid_argument("VarietySpec: entries must be >= 2");
}

std::string VarietySpec::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < seq_.size(); ++i) os << (i ? "," : "") << seq_[i];
  os << ')';
  return os.str();
}

ShapeClassifier::ShapeClassifier(const HallBasis& basis, VarietySpec variety)
    : basis_(basis), variety_(std::move(variety)) {
  memo_.assign(variety_.depth() + 1, std::vector<int>(static_cast<std::size_t>(basis.size()), -1));
}

bool ShapeClassifier::contains(int index) const { return in_suffix(index, 0); }

// Membership in the term named by sequence[suffix..]; the empty suffix is F.
bool ShapeClassifier::in_suffix(int index, std::size_t suffix) const {
  if (suffix == variety_.depth()) return true;
  return degree(index, suffix + 1) >= variety_.sequence()[suffix];
}

// deg with respect to W = term named by sequence[suffix..].
int ShapeClassifier::degree(int index, std::size_t suffix) const {
  int& slot = memo_[suffix][static_cast<std::size_t>(index)];
  if (slot >= 0) return slot;
  const auto& n = basis_[index];
  int d;
  if (suffix == variety_.depth()) {
    d = n.weight;
  } else {
    d = in_suffix(index, suffix) ? 1 : 0;
    if (!n.is_leaf()) {
      const int a = degree(n.left, suffix);
      const int b = degree(n.right, suffix);
      d = std::max({d, a, b});
      if (a > 0 && b > 0) d = std::max(d, a + b);
    }
  }
  slot = d;
  return d;
}

bool shape_in_variety(const HallBasis& basis, int index, const VarietySpec& v) {
  return ShapeClassifier(basis, v).contains(index);
}

std::vector<int> basis_mod_variety(const HallBasis& basis, int weight, const VarietySpec& v) {
  ShapeClassifier cls(basis, v);
  std::vector<int> out;
  for (int i = basis.weight_begin(weight); i < basis.weight_end(weight); ++i)
    if (!cls.contains(i)) out.push_back(i);
  return out;
}

std::vector<int> intersection_basis(const HallBasis& basis, int weight, const VarietySpec& v) {
  ShapeClassifier cls(basis, v);
  std::vector<int> out;
  for (int i = basis.weight_begin(weight); i < basis.weight_end(weight); ++i)
    if (cls.contains(i)) out.push_back(i);
  return out;
}

std::vector<int> simple_basics(const HallBasis& basis, int weight) {
  if (weight < 2) throw std::invalid_argument("simple_basics: weight must be >= 2");
  const int q = basis.rank();
  std::vector<int> out;
  std::vector<int> seq(static_cast<std::size_t>(weight), 1);
  // i1 > i2 <= i3 <= ... <= in over {1..q}
  std::function<void(std::size_t, int)> extend = [&](std::size_t pos, int current) {
    if (pos == seq.size()) {
      out.push_back(current);
      return;
    }
    for (int g = seq[pos - 1]; g <= q; ++g) {
      seq[pos] = g;
      const int next = basis.bracket(current, g - 1);
      if (next >= 0) extend(pos + 1, next);
    }
  };
  for (int i1 = 2; i1 <= q; ++i1) {
    for (int i2 = 1; i2 < i1; ++i2) {
      seq[0] = i1;
      seq[1] = i2;
      const int b = basis.bracket(i1 - 1, i2 - 1);
      if (b >= 0) extend(2, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lcs
