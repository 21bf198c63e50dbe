#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lcskit/smith.hpp"
#include "lcskit/word.hpp"

namespace lcs {

/// A finite group given by an enumerated carrier.
///
/// Elements are numbered 0..order()-1 with 0 the identity. Small groups
/// keep a full multiplication table; larger ones multiply through the
/// model's state representation.
class ConcreteGroup {
 public:
  using State = std::vector<std::int64_t>;
  using Multiply = std::function<State(const State&, const State&)>;

  static constexpr std::size_t kMaxOrder = 10'000;
  static constexpr std::size_t kTableOrder = 2'048;

  /// Enumerates the group generated by `generators` inside the model and
  /// checks identity, inverses and (sampled) associativity. Throws
  /// ResourceLimit past kMaxOrder and std::logic_error when a check fails.
  ConcreteGroup(std::string id, State identity, std::vector<State> generators, Multiply multiply);

  const std::string& id() const { return id_; }
  std::size_t order() const { return states_.size(); }
  const std::vector<int>& generators() const { return generators_; }
  const State& state(int e) const { return states_[static_cast<std::size_t>(e)]; }

  int multiply(int a, int b) const;
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  /// a^-1 b^-1 a b.
  int commutator(int a, int b) const;
  int power(int a, std::int64_t k) const;
  int element_order(int a) const;

  /// Image of a word under x_i -> generators()[i-1].
  int evaluate(const Word& w) const;
  /// True when every relator maps to the identity.
  bool satisfies(const Presentation& p) const;

 private:
  int index_of(const State& s) const;

  std::string id_;
  Multiply multiply_;
  std::vector<State> states_;
  std::vector<int> generators_;
  std::vector<int> inverse_;
  std::vector<int> table_;  // order^2 entries when order <= kTableOrder
  struct StateHash {
    std::size_t operator()(const State& s) const;
  };
  std::unordered_map<State, int, StateHash> index_;
};

/// Catalog models:
///   dihedral(N)             order N = 2m, generated by two reflections
///   symmetric_3             generated by (1 2) and (2 3)
///   heisenberg_mod_p(p)     3x3 unitriangular over Z/p, gens e12 and e23
///   free_nilpotent(r,c,p)   collected exponent vectors mod p, p > c
///   abelian(n1,...,nk)      Z/n1 x ... x Z/nk with unit generators
///   cyclic(n)               Z/n
/// Throws std::invalid_argument for an unknown or malformed id.
ConcreteGroup build_concrete(const std::string& catalog_id);

/// Subgroups gamma_1 .. gamma_{n+1} as sorted element lists, by literal
/// closure: gamma_{k+1} = < [a,b] : a in gamma_k, b in G >.
std::vector<std::vector<int>> concrete_lower_central_series(const ConcreteGroup& g, int n);

/// True when the sorted element list is closed under conjugation by G.
bool is_normal(const ConcreteGroup& g, const std::vector<int>& subgroup);

/// Invariants of a finite abelian group from its element orders.
AbelianInvariants invariants_from_orders(const std::vector<std::int64_t>& element_orders);

/// gamma_n(G) / gamma_{n+1}(G) for the concrete group.
AbelianInvariants concrete_lcs_factor(const ConcreteGroup& g, int n);

/// A presentation paired with finite models that agree with it through
/// `exact_through`. For infinite groups both sides are compared after
/// tensoring with Z/modulus.
struct CatalogCase {
  std::string name;
  std::string presentation;
  std::function<std::string(int n)> model_for;
  std::int64_t modulus = 0;
  int exact_through = 4;
};

const std::vector<CatalogCase>& oracle_catalog();

struct OracleComparison {
  std::string name;
  std::string model;
  int n = 0;
  AbelianInvariants engine;
  AbelianInvariants oracle;
  bool agree = false;
};

/// Runs the engine and the concrete models for n = 1..max_weight
/// (bounded by each case's exactness).
std::vector<OracleComparison> compare_with_oracle(const CatalogCase& c, int max_weight);

}  // namespace lcs
