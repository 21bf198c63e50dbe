#include "lcskit/relative.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lcskit/errors.hpp"

namespace lcs {

namespace {

// Inverse of a unimodular matrix: the Smith form of V is the identity, so
// U' V V' = I and V^-1 = V' U'.
IntMatrix unimodular_inverse(const IntMatrix& V) {
  const auto snf = smith_normal_form(V);
  return snf.V * snf.U;
}

Word product_of_powers(std::span<const Word> words, const IntMatrix& U, Eigen::Index row) {
  Word out;
  for (std::size_t j = 0; j < words.size(); ++j) {
    const BigInt& e = U(row, static_cast<Eigen::Index>(j));
    if (e.is_zero()) continue;
    out *= power(words[j], e.to_int64());
  }
  return out;
}

// Splits a diagonalized generating set into R-basics and kernel elements.
void split_stage(StageRecord& s) {
  const auto snf = smith_normal_form(s.lattice);
  s.transform = snf.V;
  const IntMatrix image = snf.U * s.lattice;
  const Eigen::Index rank = snf.rank();
  for (Eigen::Index i = 0; i < snf.U.rows(); ++i) {
    Word y = product_of_powers(s.generators, snf.U, i);
    if (i < rank) {
      s.y_full.push_back(RBasic{std::move(y), snf.D(i, i), image.row(i).transpose()});
    } else if (!y.empty()) {
      s.y_kernel.push_back(std::move(y));
    }
  }
  s.factor = abelian_quotient(static_cast<int>(s.ambient_basis.size()), s.lattice);
  s.diagnostics.weight = s.weight;
  s.diagnostics.generators = s.generators.size();
  s.diagnostics.r_basics = s.y_full.size();
  s.diagnostics.kernel = s.y_kernel.size();
}

}  // namespace

StageRecord weight_one_stage(const Presentation& p, const Collector& collector) {
  collector.reset_stats();
  StageRecord s;
  s.weight = 1;
  for (int g = 0; g < p.rank; ++g) s.ambient_basis.push_back(g);
  s.generators = p.relators;
  s.lattice = IntMatrix::Zero(static_cast<Eigen::Index>(p.relators.size()), p.rank);
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    for (int g = 1; g <= p.rank; ++g)
      s.lattice(static_cast<Eigen::Index>(i), g - 1) = BigInt(p.relators[i].exponent_sum(g));
  split_stage(s);

  const IntMatrix vinv = unimodular_inverse(s.transform);
  for (Eigen::Index j = 0; j < vinv.rows(); ++j) {
    Word x;
    for (Eigen::Index k = 0; k < vinv.cols(); ++k)
      if (!vinv(j, k).is_zero()) x *= power(Word::generator(static_cast<int>(k) + 1), vinv(j, k).to_int64());
    s.transformed_generators.push_back(std::move(x));
  }
  for (const auto& r : p.relators)
    s.diagnostics.max_word_length = std::max<std::int64_t>(s.diagnostics.max_word_length,
                                                           static_cast<std::int64_t>(r.length()));
  return s;
}

std::vector<Word> rbar_basics(const StageRecord& stage1) {
  if (stage1.weight != 1) throw std::invalid_argument("rbar_basics: needs the weight-one stage");
  const auto& x = stage1.transformed_generators;
  const std::size_t s = stage1.y_full.size();
  std::vector<Word> out;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (i > j) out.push_back(commutator(stage1.y_full[i].element, x[j]));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (j > i) out.push_back(commutator(x[j], stage1.y_full[i].element));
  return out;
}

std::vector<Word> build_H(const StageRecord& previous, int n, int rank, BuildOptions options) {
  if (n < 2 || previous.weight != n - 1)
    throw std::invalid_argument("build_H: weight " + std::to_string(n) + " needs stage " +
                                std::to_string(n - 1));
  std::vector<Word> out;
  if (n == 2) {
    out = rbar_basics(previous);
    for (const auto& k : previous.y_kernel) out.push_back(k);
    const auto& x = previous.transformed_generators;
    for (std::size_t i = 0; i < previous.y_full.size() && i < x.size(); ++i)
      out.push_back(commutator(previous.y_full[i].element, x[i]));
    return out;
  }
  for (const auto& y : previous.y_full)
    for (int j = 1; j <= rank; ++j) out.push_back(commutator(y.element, Word::generator(j)));
  for (const auto& k : previous.y_kernel) out.push_back(k);
  if (options.kernel_commutators)
    for (const auto& k : previous.y_kernel)
      for (int j = 1; j <= rank; ++j) out.push_back(commutator(k, Word::generator(j)));
  return out;
}

NormalForm reduce_over_stages(const Word& w, int n, std::span<const StageRecord> stages,
                              const Collector& collector) {
  if (static_cast<int>(stages.size()) < n)
    throw std::invalid_argument("reduce_over_stages: stages 1.." + std::to_string(n) + " required");
  const HallBasis& basis = collector.basis();
  NormalForm nf;
  nf.residue = w;
  for (int k = 1; k <= n; ++k) {
    const StageRecord& s = stages[static_cast<std::size_t>(k - 1)];
    const ExponentVector v = collector.collect(nf.residue, k);
    for (int i = 0; i < basis.weight_begin(k); ++i)
      if (!v.coords[i].is_zero())
        throw ReductionFailure(k, "residue has nonzero exponent on " + basis.render(i));
    const IntVector slice = v.weight_slice(basis, k);
    // slice = sum_i alpha_i d_i (V^-1)_i, so slice^T V = (alpha_i d_i)_i.
    const IntVector t = s.transform.transpose() * slice;
    std::vector<BigInt> alpha(s.y_full.size());
    for (Eigen::Index i = 0; i < t.size(); ++i) {
      const auto ui = static_cast<std::size_t>(i);
      if (ui < s.y_full.size()) {
        if (!(t[i] % s.y_full[ui].d).is_zero())
          throw ReductionFailure(k, "coordinate not divisible by d = " + s.y_full[ui].d.str());
        alpha[ui] = t[i] / s.y_full[ui].d;
      } else if (!t[i].is_zero()) {
        throw ReductionFailure(k, "residue outside the span of the R-basics");
      }
    }
    Word p;
    for (std::size_t i = 0; i < alpha.size(); ++i)
      if (!alpha[i].is_zero()) p *= power(s.y_full[i].element, alpha[i].to_int64());
    nf.residue = p.inverse() * nf.residue;
    nf.alpha.push_back(std::move(alpha));
  }
  return nf;
}

StageRecord stage_from_generators(int n, std::vector<Word> generators, const Collector& collector,
                                  std::span<const StageRecord> earlier) {
  const HallBasis& basis = collector.basis();
  collector.reset_stats();
  StageRecord s;
  s.weight = n;
  for (int i = basis.weight_begin(n); i < basis.weight_end(n); ++i) s.ambient_basis.push_back(i);
  s.lattice = IntMatrix::Zero(static_cast<Eigen::Index>(generators.size()), basis.count(n));
  for (std::size_t g = 0; g < generators.size(); ++g) {
    ExponentVector v = collector.collect(generators[g], n);
    int witness = -1;
    for (int i = 0; i < basis.weight_begin(n) && witness < 0; ++i)
      if (!v.coords[i].is_zero()) witness = i;
    if (witness >= 0) {
      NormalForm nf;
      try {
        nf = reduce_over_stages(generators[g], n - 1, earlier, collector);
      } catch (const ReductionFailure& e) {
        throw InconsistentStage("generator " + std::to_string(g) + " of weight " + std::to_string(n) +
                                " has exponent on " + basis.render(witness) + " (" + e.what() + ")");
      }
      generators[g] = nf.residue;
      v = collector.collect(generators[g], n);
    }
    s.lattice.row(static_cast<Eigen::Index>(g)) = v.weight_slice(basis, n).transpose();
  }
  s.generators = std::move(generators);
  split_stage(s);
  s.diagnostics.max_word_length = collector.stats().max_length;
  s.diagnostics.collected_words = collector.stats().words;
  return s;
}

StageRecord stage(std::span<const StageRecord> earlier, int n, const Collector& collector,
                  BuildOptions options) {
  if (earlier.empty()) throw std::invalid_argument("stage: previous stage required");
  auto h = build_H(earlier.back(), n, collector.basis().rank(), options);
  return stage_from_generators(n, std::move(h), collector, earlier);
}

Word evaluate(const Presentation& p, std::span<const ConjugatedRelator> product) {
  Word out;
  for (const auto& c : product) {
    if (c.relator < 0 || static_cast<std::size_t>(c.relator) >= p.relators.size())
      throw std::out_of_range("evaluate: relator index " + std::to_string(c.relator));
    out *= conjugate(power(p.relators[static_cast<std::size_t>(c.relator)], c.exponent), c.conjugator);
  }
  return out;
}

// ---------------------------------------------------------------------------

LcsEngine::LcsEngine(Presentation p, EngineOptions options)
    : presentation_(std::move(p)),
      options_(options),
      collector_(std::max(presentation_.rank, 1), std::clamp(options.max_weight, 1, kMaxWeight),
                 CollectOptions{options.length_cap}) {
  if (presentation_.rank < 1 || presentation_.rank > kMaxRank)
    throw BoundsError("rank " + std::to_string(presentation_.rank) + " outside 1.." +
                      std::to_string(kMaxRank));
  if (presentation_.relators.size() > static_cast<std::size_t>(kMaxRelators))
    throw BoundsError(std::to_string(presentation_.relators.size()) + " relators, at most " +
                      std::to_string(kMaxRelators) + " supported");
  if (options_.max_weight < 1 || options_.max_weight > kMaxWeight)
    throw BoundsError("max weight " + std::to_string(options_.max_weight) + " outside 1.." +
                      std::to_string(kMaxWeight));
  for (const auto& r : presentation_.relators)
    if (r.max_generator() > presentation_.rank)
      throw std::invalid_argument("relator uses a generator beyond the rank");
}

const StageRecord& LcsEngine::stage(int n) {
  if (n < 1 || n > options_.max_weight)
    throw BoundsError("weight " + std::to_string(n) + " outside 1.." +
                      std::to_string(options_.max_weight));
  if (stages_.empty()) stages_.push_back(weight_one_stage(presentation_, collector_));
  while (static_cast<int>(stages_.size()) < n) {
    const int next = static_cast<int>(stages_.size()) + 1;
    stages_.push_back(lcs::stage(stages_, next, collector_, options_.build));
  }
  return stages_[static_cast<std::size_t>(n - 1)];
}

LcsReport LcsEngine::report() {
  LcsReport r;
  for (int n = 1; n <= options_.max_weight; ++n) {
    const StageRecord& s = stage(n);
    r.factors.push_back(FactorEntry{n, s.factor});
    r.diagnostics.push_back(s.diagnostics);
  }
  return r;
}

NormalForm LcsEngine::normal_form_in_R(std::span<const ConjugatedRelator> product, int n) {
  stage(n);
  return reduce_over_stages(evaluate(presentation_, product), n,
                            std::span<const StageRecord>(stages_).first(static_cast<std::size_t>(n)),
                            collector_);
}

AbelianInvariants lcs_factor(const Presentation& p, int n, std::int64_t length_cap) {
  EngineOptions options;
  options.max_weight = std::max(n, 1);
  options.length_cap = length_cap;
  return LcsEngine(p, options).lcs_factor(n);
}

}  // namespace lcs
