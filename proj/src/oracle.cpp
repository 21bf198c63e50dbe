#include "lcskit/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <random>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "lcskit/collect.hpp"
#include "lcskit/errors.hpp"
#include "lcskit/relative.hpp"

namespace lcs {

std::size_t ConcreteGroup::StateHash::operator()(const State& s) const {
  std::size_t h = 1469598103934665603ull;
  for (auto x : s) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
  return h;
}

ConcreteGroup::ConcreteGroup(std::string id, State identity, std::vector<State> generators,
                             Multiply op)
    : id_(std::move(id)), multiply_(std::move(op)) {
  states_.push_back(identity);
  index_.emplace(identity, 0);
  for (std::size_t i = 0; i < states_.size(); ++i) {
    for (const auto& g : generators) {
      State next = multiply_(states_[i], g);
      if (index_.contains(next)) continue;
      if (states_.size() >= kMaxOrder)
        throw ResourceLimit("group " + id_ + " has more than " + std::to_string(kMaxOrder) + " elements");
      index_.emplace(next, static_cast<int>(states_.size()));
      states_.push_back(std::move(next));
    }
  }
  for (const auto& g : generators) generators_.push_back(index_of(g));

  const std::size_t n = states_.size();
  if (n <= kTableOrder) {
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        table_[a * n + b] = index_of(multiply_(states_[a], states_[b]));
  }

  for (std::size_t a = 0; a < n; ++a) {
    const int ai = static_cast<int>(a);
    if (multiply(0, ai) != ai || multiply(ai, 0) != ai)
      throw std::logic_error(id_ + ": identity check failed");
  }
  inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    const int ai = static_cast<int>(a);
    int x = ai, prev = 0;
    std::size_t steps = 0;
    while (x != 0) {
      prev = x;
      x = multiply(x, ai);
      if (++steps > n) throw std::logic_error(id_ + ": element without finite order");
    }
    inverse_[a] = prev;  // a^(k-1) where a^k = 1
    if (multiply(ai, inverse_[a]) != 0) throw std::logic_error(id_ + ": inverse check failed");
  }

  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
  const int samples = n <= 16 ? 0 : 500;
  auto check = [&](int a, int b, int c) {
    if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
      throw std::logic_error(id_ + ": associativity check failed");
  };
  if (samples == 0) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) check(static_cast<int>(a), static_cast<int>(b), static_cast<int>(c));
  }
  for (int s = 0; s < samples; ++s) check(pick(rng), pick(rng), pick(rng));
}

int ConcreteGroup::index_of(const State& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) throw std::logic_error(id_ + ": product left the enumerated carrier");
  return it->second;
}

int ConcreteGroup::multiply(int a, int b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * states_.size() + static_cast<std::size_t>(b)];
  return index_of(multiply_(state(a), state(b)));
}

int ConcreteGroup::commutator(int a, int b) const {
  return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
}

int ConcreteGroup::power(int a, std::int64_t k) const {
  if (k < 0) return power(inverse(a), -k);
  int out = 0, base = a;
  while (k) {
    if (k & 1) out = multiply(out, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return out;
}

int ConcreteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = multiply(x, a)) ++k;
  return k;
}

int ConcreteGroup::evaluate(const Word& w) const {
  int out = 0;
  for (const auto& l : w.letters()) {
    if (l.generator < 1 || l.generator > static_cast<int>(generators_.size()))
      throw std::invalid_argument(id_ + ": word uses generator " + std::to_string(l.generator));
    const int g = generators_[static_cast<std::size_t>(l.generator - 1)];
    out = multiply(out, l.sign > 0 ? g : inverse(g));
  }
  return out;
}

bool ConcreteGroup::satisfies(const Presentation& p) const {
  if (p.rank != static_cast<int>(generators_.size())) return false;
  return std::all_of(p.relators.begin(), p.relators.end(), [&](const Word& r) { return evaluate(r) == 0; });
}

// ---------------------------------------------------------------------------

namespace {

using State = ConcreteGroup::State;

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

ConcreteGroup dihedral(std::int64_t order) {
  if (order < 2 || order % 2) throw std::invalid_argument("dihedral order must be even and >= 2");
  const std::int64_t m = order / 2;
  // (a, b) = r^a s^b; s r = r^-1 s.
  auto mul = [m](const State& u, const State& v) {
    return State{mod(u[0] + (u[1] ? -v[0] : v[0]), m), u[1] ^ v[1]};
  };
  return ConcreteGroup("dihedral(" + std::to_string(order) + ")", {0, 0}, {{0, 1}, {1 % m, 1}}, mul);
}

ConcreteGroup symmetric_3() {
  auto mul = [](const State& u, const State& v) {
    // (u v)(i) = v(u(i)): apply u first.
    return State{v[static_cast<std::size_t>(u[0])], v[static_cast<std::size_t>(u[1])],
                 v[static_cast<std::size_t>(u[2])]};
  };
  return ConcreteGroup("symmetric_3", {0, 1, 2}, {{1, 0, 2}, {0, 2, 1}}, mul);
}

ConcreteGroup heisenberg(std::int64_t p) {
  if (p < 2) throw std::invalid_argument("heisenberg modulus must be >= 2");
  // (a, b, c) is [[1,a,c],[0,1,b],[0,0,1]].
  auto mul = [p](const State& u, const State& v) {
    return State{mod(u[0] + v[0], p), mod(u[1] + v[1], p), mod(u[2] + v[2] + u[0] * v[1], p)};
  };
  return ConcreteGroup("heisenberg_mod_p(" + std::to_string(p) + ")", {0, 0, 0},
                       {{1, 0, 0}, {0, 1, 0}}, mul);
}

ConcreteGroup abelian(const std::vector<std::int64_t>& orders, const std::string& id) {
  if (orders.empty()) throw std::invalid_argument("abelian needs at least one factor");
  for (auto o : orders)
    if (o < 1) throw std::invalid_argument("abelian factor orders must be positive");
  auto mul = [orders](const State& u, const State& v) {
    State w(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) w[i] = mod(u[i] + v[i], orders[i]);
    return w;
  };
  std::vector<State> gens;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    State g(orders.size(), 0);
    g[i] = 1 % orders[i];
    gens.push_back(g);
  }
  return ConcreteGroup(id, State(orders.size(), 0), gens, mul);
}

ConcreteGroup free_nilpotent(int rank, int cls, std::int64_t p) {
  if (rank < 1 || cls < 1) throw std::invalid_argument("free_nilpotent needs rank, class >= 1");
  if (p <= cls) throw std::invalid_argument("free_nilpotent needs p > class");
  auto collector = std::make_shared<Collector>(rank, cls);
  const int size = collector->basis().count_up_to(cls);
  auto to_word = [collector, cls, p](const State& s) {
    ExponentVector v;
    v.cutoff = cls;
    v.coords = IntVector::Zero(static_cast<Eigen::Index>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i)
      v.coords[static_cast<Eigen::Index>(i)] = BigInt(s[i] > p / 2 ? s[i] - p : s[i]);
    return collector->expand(v);
  };
  auto mul = [collector, to_word, cls, p](const State& u, const State& v) {
    const ExponentVector e = collector->collect(to_word(u) * to_word(v), cls);
    State w(static_cast<std::size_t>(e.coords.size()));
    for (Eigen::Index i = 0; i < e.coords.size(); ++i)
      w[static_cast<std::size_t>(i)] = mod((e.coords[i] % BigInt(p)).to_int64(), p);
    return w;
  };
  std::vector<State> gens;
  for (int g = 0; g < rank; ++g) {
    State s(static_cast<std::size_t>(size), 0);
    s[static_cast<std::size_t>(g)] = 1;
    gens.push_back(s);
  }
  std::ostringstream id;
  id << "free_nilpotent(" << rank << "," << cls << "," << p << ")";
  return ConcreteGroup(id.str(), State(static_cast<std::size_t>(size), 0), gens, mul);
}

std::vector<std::int64_t> parse_args(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
  return out;
}

// Subgroup generated by `gens`, as a membership mask.
std::vector<char> generate(const ConcreteGroup& g, const std::vector<int>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> members{0};
  in[0] = 1;
  std::vector<int> used;
  for (int s : gens) {
    if (in[static_cast<std::size_t>(s)]) continue;
    used.push_back(s);
    std::deque<int> queue(members.begin(), members.end());
    while (!queue.empty()) {
      const int a = queue.front();
      queue.pop_front();
      for (int u : used) {
        const int b = g.multiply(a, u);
        if (in[static_cast<std::size_t>(b)]) continue;
        in[static_cast<std::size_t>(b)] = 1;
        members.push_back(b);
        queue.push_back(b);
      }
    }
  }
  return in;
}

std::vector<int> members_of(const std::vector<char>& mask) {
  std::vector<int> out;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace

ConcreteGroup build_concrete(const std::string& catalog_id) {
  static const std::regex call(R"(\s*([a-z_0-9]+)\s*(?:\(([0-9,\s]*)\))?\s*)");
  std::smatch m;
  if (!std::regex_match(catalog_id, m, call)) throw std::invalid_argument("unknown catalog id: " + catalog_id);
  const std::string name = m[1].str();
  const auto args = m[2].matched ? parse_args(m[2].str()) : std::vector<std::int64_t>{};
  auto expect = [&](std::size_t k) {
    if (args.size() != k)
      throw std::invalid_argument(name + " takes " + std::to_string(k) + " arguments: " + catalog_id);
  };
  if (name == "dihedral") {
    expect(1);
    return dihedral(args[0]);
  }
  if (name == "symmetric_3") {
    expect(0);
    return symmetric_3();
  }
  if (name == "heisenberg_mod_p") {
    expect(1);
    return heisenberg(args[0]);
  }
  if (name == "free_nilpotent") {
    expect(3);
    return free_nilpotent(static_cast<int>(args[0]), static_cast<int>(args[1]), args[2]);
  }
  if (name == "abelian") return abelian(args, catalog_id);
  if (name == "cyclic") {
    expect(1);
    return abelian(args, "cyclic(" + std::to_string(args[0]) + ")");
  }
  throw std::invalid_argument("unknown catalog id: " + catalog_id);
}

std::vector<std::vector<int>> concrete_lower_central_series(const ConcreteGroup& g, int n) {
  std::vector<std::vector<int>> series;
  std::vector<int> all(g.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  series.push_back(all);
  for (int k = 1; k <= n; ++k) {
    std::vector<char> seen(g.order(), 0);
    std::vector<int> comms;
    for (int a : series.back())
      for (int b : all) {
        const int c = g.commutator(a, b);
        if (!seen[static_cast<std::size_t>(c)]) {
          seen[static_cast<std::size_t>(c)] = 1;
          comms.push_back(c);
        }
      }
    series.push_back(members_of(generate(g, comms)));
  }
  return series;
}

bool is_normal(const ConcreteGroup& g, const std::vector<int>& subgroup) {
  std::vector<char> in(g.order(), 0);
  for (int h : subgroup) in[static_cast<std::size_t>(h)] = 1;
  for (int h : subgroup)
    for (std::size_t x = 0; x < g.order(); ++x) {
      const int xi = static_cast<int>(x);
      if (!in[static_cast<std::size_t>(g.multiply(g.multiply(g.inverse(xi), h), xi))]) return false;
    }
  return true;
}

AbelianInvariants invariants_from_orders(const std::vector<std::int64_t>& element_orders) {
  const auto n = static_cast<std::int64_t>(element_orders.size());
  std::vector<BigInt> cyclic;
  std::vector<std::pair<std::int64_t, std::int64_t>> primes;  // (p, p-part of n)
  std::int64_t rest = n;
  for (std::int64_t p = 2; rest > 1; ++p) {
    if (p * p > rest) p = rest;
    if (rest % p) continue;
    std::int64_t part = 1;
    while (rest % p == 0) {
      rest /= p;
      part *= p;
    }
    primes.emplace_back(p, part);
  }
  for (const auto& [p, part] : primes) {
    // ranks[j] = #{cyclic factors of order >= p^j} = log_p(|Q[p^j]| / |Q[p^(j-1)]|)
    std::vector<int> ranks{0};
    std::int64_t prev = 1, pj = 1;
    while (prev < part) {
      pj *= p;
      const auto count = static_cast<std::int64_t>(
          std::count_if(element_orders.begin(), element_orders.end(), [&](std::int64_t o) { return pj % o == 0; }));
      int r = 0;
      for (std::int64_t q = count / prev; q > 1; q /= p) ++r;
      ranks.push_back(r);
      prev = count;
    }
    ranks.push_back(0);
    std::int64_t power = 1;
    for (std::size_t j = 1; j + 1 < ranks.size(); ++j) {
      power *= p;
      for (int c = 0; c < ranks[j] - ranks[j + 1]; ++c) cyclic.emplace_back(power);
    }
  }
  return abelian_from_cyclic_orders(cyclic);
}

AbelianInvariants concrete_lcs_factor(const ConcreteGroup& g, int n) {
  if (n < 1) throw std::invalid_argument("concrete_lcs_factor: n must be >= 1");
  const auto series = concrete_lower_central_series(g, n);
  const auto& top = series[static_cast<std::size_t>(n - 1)];
  const auto& bottom = series[static_cast<std::size_t>(n)];
  std::vector<char> in_bottom(g.order(), 0);
  for (int h : bottom) in_bottom[static_cast<std::size_t>(h)] = 1;
  std::vector<char> labelled(g.order(), 0);
  std::vector<std::int64_t> orders;
  for (int a : top) {
    if (labelled[static_cast<std::size_t>(a)]) continue;
    for (int h : bottom) labelled[static_cast<std::size_t>(g.multiply(a, h))] = 1;
    std::int64_t k = 1;
    for (int x = a; !in_bottom[static_cast<std::size_t>(x)]; x = g.multiply(x, a)) ++k;
    orders.push_back(k);
  }
  return invariants_from_orders(orders);
}

// ---------------------------------------------------------------------------

const std::vector<CatalogCase>& oracle_catalog() {
  static const std::vector<CatalogCase> cases = {
      {"free abelian Z^2", "gens x, y\nrels [y,x]", [](int) { return std::string("abelian(7,7)"); }, 7, 8},
      {"infinite dihedral", "gens x, y\nrels x^2, y^2",
       [](int n) { return "dihedral(" + std::to_string(1 << (n + 2)) + ")"; }, 0, 8},
      {"heisenberg", "gens x, y\nrels [y,x,x], [y,x,y]", [](int) { return std::string("heisenberg_mod_p(7)"); },
       7, 8},
      {"heisenberg (collected model)", "gens x, y\nrels [y,x,x], [y,x,y]",
       [](int) { return std::string("free_nilpotent(2,2,5)"); }, 5, 8},
      {"Z/2 x Z/4 x Z", "gens x, y, z\nrels [y,x], [z,x], [z,y], x^2, y^4",
       [](int) { return std::string("abelian(2,4,12)"); }, 12, 8},
      {"Z/3", "gens x\nrels x^3", [](int) { return std::string("cyclic(3)"); }, 0, 8},
      {"S3", "gens x, y\nrels x^2, y^2, (x y)^3", [](int) { return std::string("symmetric_3"); }, 0, 8},
      {"dihedral of order 8", "gens x, y\nrels x^2, y^2, (x y)^4", [](int) { return std::string("dihedral(8)"); },
       0, 8},
  };
  return cases;
}

std::vector<OracleComparison> compare_with_oracle(const CatalogCase& c, int max_weight) {
  const Presentation p = parse_presentation(c.presentation);
  const int top = std::min(max_weight, c.exact_through);
  EngineOptions options;
  options.max_weight = top;
  LcsEngine engine(p, options);
  std::vector<OracleComparison> out;
  std::map<std::string, ConcreteGroup> models;
  for (int n = 1; n <= top; ++n) {
    const std::string id = c.model_for(n);
    auto it = models.find(id);
    if (it == models.end()) {
      it = models.emplace(id, build_concrete(id)).first;
      if (!it->second.satisfies(p)) throw std::logic_error(id + " does not satisfy the relators of " + c.name);
    }
    OracleComparison r;
    r.name = c.name;
    r.model = id;
    r.n = n;
    r.engine = tensor_mod(engine.lcs_factor(n), BigInt(c.modulus));
    r.oracle = tensor_mod(concrete_lcs_factor(it->second, n), BigInt(c.modulus));
    r.agree = r.engine == r.oracle;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace lcs
