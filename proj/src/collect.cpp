#include "lcskit/collect.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

#include "lcskit/errors.hpp"

namespace lcs {

bool ExponentVector::is_zero() const {
  for (Eigen::Index i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) return false;
  return true;
}

IntVector ExponentVector::weight_slice(const HallBasis& basis, int w) const {
  return coords.segment(basis.weight_begin(w), basis.count(w));
}

namespace {

struct Sym {
  int idx;
  std::int64_t exp;
};

// Appends with merging of equal neighbours; exponents that cancel vanish.
void push_merged(std::vector<Sym>& out, Sym s) {
  if (s.exp == 0) return;
  if (!out.empty() && out.back().idx == s.idx) {
    out.back().exp += s.exp;
    if (out.back().exp == 0) out.pop_back();
    return;
  }
  out.push_back(s);
}

std::int64_t total_length(const std::vector<Sym>& w) {
  std::int64_t n = 0;
  for (const auto& s : w) n += s.exp < 0 ? -s.exp : s.exp;
  return n;
}

// State for collecting a single basic `c` out of the current word.
class CollectPass {
 public:
  CollectPass(const HallBasis& basis, int c, int cutoff, std::int64_t cap, CollectStats& stats)
      : basis_(basis), c_(c), cutoff_(cutoff), cap_(cap), stats_(stats) {}

  // (a^sign)^(c^q) as a symbol sequence.
  const std::vector<Sym>& conjugate_power(int a, int sign, std::int64_t q) {
    auto key = std::make_tuple(a, sign, q);
    auto it = power_memo_.find(key);
    if (it != power_memo_.end()) return it->second;
    std::vector<Sym> seq{Sym{a, sign}};
    const int dir = q > 0 ? 1 : -1;
    for (std::int64_t step = 0; step < (q > 0 ? q : -q); ++step) {
      std::vector<Sym> next;
      for (const auto& s : seq) {
        const auto& one = conjugate_once(s.idx, s.exp > 0 ? 1 : -1, dir);
        const std::int64_t reps = s.exp > 0 ? s.exp : -s.exp;
        for (std::int64_t r = 0; r < reps; ++r)
          for (const auto& t : one) push_merged(next, t);
      }
      if (total_length(next) > cap_)
        throw ResourceLimit("intermediate word exceeds " + std::to_string(cap_) + " letters");
      seq = std::move(next);
    }
    return power_memo_.emplace(key, std::move(seq)).first->second;
  }

 private:
  // (a^sign)^(c^dir) for dir = +-1.
  const std::vector<Sym>& conjugate_once(int a, int sign, int dir) {
    auto key = std::make_tuple(a, sign, dir);
    auto it = once_memo_.find(key);
    if (it != once_memo_.end()) return it->second;
    ++stats_.conjugations;

    // chain a_0 = a, a_{k+1} = [a_k, c] while within the cutoff
    std::vector<int> chain{a};
    const int wc = basis_[c_].weight;
    while (basis_[chain.back()].weight + wc <= cutoff_) {
      const int next = basis_.bracket(chain.back(), c_);
      if (next < 0)
        throw std::logic_error("collection produced a non-basic bracket " +
                               basis_.render(chain.back()) + " with " + basis_.render(c_));
      chain.push_back(next);
    }

    std::vector<Sym> out;
    const std::size_t m = chain.size();
    if (dir > 0) {
      if (sign > 0) {
        // a^c = a [a,c]
        out.push_back({chain[0], 1});
        if (m > 1) out.push_back({chain[1], 1});
      } else {
        // (a^-1)^c = [a,c]^-1 a^-1
        if (m > 1) out.push_back({chain[1], -1});
        out.push_back({chain[0], -1});
      }
    } else {
      // a^(c^-1) = a_0 a_2 a_4 ... a_5^-1 a_3^-1 a_1^-1, and its inverse
      std::vector<Sym> y;
      for (std::size_t k = 0; k < m; k += 2) y.push_back({chain[k], 1});
      if (m >= 2) {
        for (std::size_t k = (m - 1) % 2 == 1 ? m - 1 : m - 2;; k -= 2) {
          y.push_back({chain[k], -1});
          if (k == 1) break;
        }
      }
      if (sign > 0) {
        out = std::move(y);
      } else {
        for (auto r = y.rbegin(); r != y.rend(); ++r) out.push_back({r->idx, -r->exp});
      }
    }
    return once_memo_.emplace(key, std::move(out)).first->second;
  }

  const HallBasis& basis_;
  int c_;
  int cutoff_;
  std::int64_t cap_;
  CollectStats& stats_;
  std::map<std::tuple<int, int, int>, std::vector<Sym>> once_memo_;
  std::map<std::tuple<int, int, std::int64_t>, std::vector<Sym>> power_memo_;
};

}  // namespace

Collector::Collector(int rank, int max_weight, CollectOptions options)
    : basis_(std::make_shared<HallBasis>(rank, max_weight)), options_(options) {}

Collector::Collector(std::shared_ptr<const HallBasis> basis, CollectOptions options)
    : basis_(std::move(basis)), options_(options) {}

ExponentVector Collector::collect(const Word& w, int n) const {
  const HallBasis& basis = *basis_;
  if (n < 1 || n > basis.max_weight())
    throw std::invalid_argument("collect: cutoff " + std::to_string(n) + " outside 1.." +
                                std::to_string(basis.max_weight()));
  if (w.max_generator() > basis.rank())
    throw std::invalid_argument("collect: word uses a generator beyond rank " +
                                std::to_string(basis.rank()));

  ++stats_.words;
  std::vector<Sym> word;
  word.reserve(w.length());
  for (const auto& l : w.letters()) push_merged(word, Sym{l.generator - 1, l.sign});
  stats_.max_length = std::max(stats_.max_length, total_length(word));
  if (total_length(word) > options_.length_cap)
    throw ResourceLimit("input word exceeds " + std::to_string(options_.length_cap) + " letters");

  const int limit = basis.count_up_to(n);
  std::vector<std::int64_t> exps(static_cast<std::size_t>(limit), 0);

  for (int c = 0; c < limit && !word.empty(); ++c) {
    if (std::none_of(word.begin(), word.end(), [c](const Sym& s) { return s.idx == c; })) continue;
    const int wc = basis[c].weight;
    CollectPass pass(basis, c, n, options_.length_cap, stats_);

    // Right to left: each non-c symbol is conjugated by c^q, q the exponent
    // sum of the c's to its right.
    std::int64_t q = 0;
    std::vector<Sym> reversed;
    std::int64_t length = 0;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      if (it->idx == c) {
        q += it->exp;
        continue;
      }
      if (q == 0 || basis[it->idx].weight + wc > n) {
        reversed.push_back(*it);
        length += it->exp < 0 ? -it->exp : it->exp;
      } else {
        const auto& image = pass.conjugate_power(it->idx, it->exp > 0 ? 1 : -1, q);
        const std::int64_t reps = it->exp > 0 ? it->exp : -it->exp;
        for (std::int64_t r = 0; r < reps; ++r) {
          for (auto s = image.rbegin(); s != image.rend(); ++s) {
            reversed.push_back(*s);
            length += s->exp < 0 ? -s->exp : s->exp;
          }
          if (length > options_.length_cap)
            throw ResourceLimit("intermediate word exceeds " +
                                std::to_string(options_.length_cap) + " letters");
        }
      }
    }
    exps[static_cast<std::size_t>(c)] = q;

    std::vector<Sym> next;
    next.reserve(reversed.size());
    for (auto it = reversed.rbegin(); it != reversed.rend(); ++it) push_merged(next, *it);
    word = std::move(next);
    stats_.max_length = std::max(stats_.max_length, total_length(word));
  }
  // Anything left has weight > n.

  ExponentVector out;
  out.cutoff = n;
  out.coords = IntVector::Zero(limit);
  for (int i = 0; i < limit; ++i) out.coords[i] = BigInt(exps[static_cast<std::size_t>(i)]);
  return out;
}

IntVector Collector::weight_component(const Word& w, int n) const {
  const ExponentVector v = collect(w, n);
  const HallBasis& basis = *basis_;
  for (int i = 0; i < basis.weight_begin(n); ++i)
    if (!v.coords[i].is_zero()) throw NotInGamma(n, i, basis[i].weight);
  return v.weight_slice(basis, n);
}

Word Collector::expand(const ExponentVector& v) const {
  Word out;
  for (Eigen::Index i = 0; i < v.coords.size(); ++i) {
    if (v.coords[i].is_zero()) continue;
    out *= power(basis_->word(static_cast<int>(i)), v.coords[i].to_int64());
  }
  return out;
}

ExponentVector collect(const Word& w, int rank, int n) { return Collector(rank, n).collect(w, n); }

IntVector weight_component(const Word& w, int rank, int n) {
  return Collector(rank, n).weight_component(w, n);
}

}  // namespace lcs
