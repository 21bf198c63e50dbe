#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "lcskit/collect.hpp"
#include "lcskit/smith.hpp"
#include "lcskit/word.hpp"

namespace lcs {

/// An R-basic: an element of R with y = (transformed basis element)^d
/// modulo gamma_{n+1} F. `coords` are its weight-n coordinates.
struct RBasic {
  Word element;
  BigInt d;
  IntVector coords;
};

struct StageDiagnostics {
  int weight = 0;
  std::size_t generators = 0;
  std::size_t r_basics = 0;
  std::size_t kernel = 0;
  std::int64_t max_word_length = 0;
  std::int64_t collected_words = 0;
  friend bool operator==(const StageDiagnostics&, const StageDiagnostics&) = default;
};

/// Output of one weight of the construction.
///
/// The generators H_n all lie in R and in gamma_n F. Their weight-n
/// coordinates form `lattice`; with U lattice V = D, the rows of U give
/// y_i = prod_j h_j^{U_ij}. Rows with d_i != 0 are the R-basics, the others
/// vanish modulo gamma_{n+1} F and are carried to the next weight.
struct StageRecord {
  int weight = 0;
  std::vector<int> ambient_basis;  // basic positions of weight n
  std::vector<Word> generators;
  IntMatrix lattice;
  IntMatrix transform;  // V
  std::vector<RBasic> y_full;
  std::vector<Word> y_kernel;
  AbelianInvariants factor;
  /// Weight 1 only: the Nielsen-transformed free basis x_{1_j}, whose
  /// abelianized coordinates are the rows of V^-1.
  std::vector<Word> transformed_generators;
  StageDiagnostics diagnostics;

  std::span<const RBasic> r_basics() const { return y_full; }
};

/// Stage 1 from the relator exponent-sum matrix.
StageRecord weight_one_stage(const Presentation& p, const Collector& collector);

/// {[y_i, x_j] : i > j} followed by {[x_j, y_i] : j > i}, over the R-basics
/// y_i and transformed generators x_j of a weight-one stage.
std::vector<Word> rbar_basics(const StageRecord& stage1);

struct BuildOptions {
  /// Also commute carried kernel elements with every generator.
  bool kernel_commutators = true;
};

/// Generating set H_n for weight n >= 2.
///
/// n = 2: rbar basics, the stage-1 kernel, and the diagonal [y_i, x_i].
/// n >= 3: [y, x_j] for every R-basic y of weight n-1 and generator x_j,
/// the carried kernel, and [k, x_j] for carried kernel elements k.
std::vector<Word> build_H(const StageRecord& previous, int n, int rank, BuildOptions options = {});

/// Diagonalizes a generating set at weight n. Generators with a nonzero
/// lower-weight residue are first divided by their normal form over the
/// earlier stages; InconsistentStage is thrown when that fails.
StageRecord stage_from_generators(int n, std::vector<Word> generators, const Collector& collector,
                                  std::span<const StageRecord> earlier);

/// The next stage: build_H followed by stage_from_generators.
StageRecord stage(std::span<const StageRecord> earlier, int n, const Collector& collector,
                  BuildOptions options = {});

/// r^exponent conjugated by `conjugator`: c^-1 r^e c.
struct ConjugatedRelator {
  int relator = 0;  // 0-based index into Presentation::relators
  int exponent = 1;
  Word conjugator;
};

/// The element prod_k c_k^-1 r_k^e_k c_k of R.
Word evaluate(const Presentation& p, std::span<const ConjugatedRelator> product);

struct NormalForm {
  /// alpha[k-1][i] is the exponent of the i-th R-basic of weight k.
  std::vector<std::vector<BigInt>> alpha;
  /// (prod of R-basic powers)^-1 w, which lies in gamma_{n+1} F.
  Word residue;
};

/// Exponents of w over the R-basics of weights 1..n. Throws
/// ReductionFailure when a residue leaves the stage lattices.
NormalForm reduce_over_stages(const Word& w, int n, std::span<const StageRecord> stages,
                              const Collector& collector);

struct EngineOptions {
  int max_weight = 4;
  std::int64_t length_cap = 1'000'000;
  BuildOptions build;
};

struct FactorEntry {
  int n = 0;
  AbelianInvariants factor;
  friend bool operator==(const FactorEntry&, const FactorEntry&) = default;
};

struct LcsReport {
  std::vector<FactorEntry> factors;
  std::vector<StageDiagnostics> diagnostics;
  friend bool operator==(const LcsReport&, const LcsReport&) = default;
};

/// Drives the stages for one presentation. Stages are computed on demand and
/// cached; stage n needs stage n-1.
class LcsEngine {
 public:
  static constexpr int kMaxRank = 8;
  static constexpr int kMaxRelators = 8;
  static constexpr int kMaxWeight = 8;

  /// Throws BoundsError for presentations or weights outside the caps.
  explicit LcsEngine(Presentation p, EngineOptions options = {});

  const Presentation& presentation() const { return presentation_; }
  const Collector& collector() const { return collector_; }
  int max_weight() const { return options_.max_weight; }

  const StageRecord& stage(int n);
  std::span<const StageRecord> stages() const { return stages_; }

  /// gamma_n(G) / gamma_{n+1}(G).
  AbelianInvariants lcs_factor(int n) { return stage(n).factor; }

  /// Factors for n = 1..max_weight.
  LcsReport report();

  /// Unique exponents over the R-basics of weight <= n for an element of R
  /// given as a product of conjugated relators.
  NormalForm normal_form_in_R(std::span<const ConjugatedRelator> product, int n);

 private:
  Presentation presentation_;
  EngineOptions options_;
  Collector collector_;
  std::vector<StageRecord> stages_;
};

/// One-shot convenience over LcsEngine.
AbelianInvariants lcs_factor(const Presentation& p, int n, std::int64_t length_cap = 1'000'000);

}  // namespace lcs
