#include "toricrank/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>

namespace toric {

Monomial Monomial::from_support(int m, const std::vector<int>& edges) {
  Monomial mon = one(m);
  for (int e : edges) mon.exponents.at(static_cast<std::size_t>(e)) += 1;
  return mon;
}

int Monomial::total_degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] != 0) s.push_back(static_cast<int>(i));
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] > other.exponents[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exponents.size(); ++i) r.exponents[i] += b.exponents[i];
  return r;
}

int GDegree::total() const { return std::accumulate(b.begin(), b.end(), 0); }

GDegree g_degree(const Graph& g, const Monomial& mon) {
  if (static_cast<int>(mon.exponents.size()) != g.edge_count()) {
    throw InvalidArgument("g_degree: exponent vector length differs from edge count");
  }
  GDegree d{std::vector<int>(static_cast<std::size_t>(g.vertex_count()), 0)};
  for (int i = 0; i < g.edge_count(); ++i) {
    const int k = mon.exponents[static_cast<std::size_t>(i)];
    if (k == 0) continue;
    d.b[static_cast<std::size_t>(g.edge(i).u - 1)] += k;
    d.b[static_cast<std::size_t>(g.edge(i).v - 1)] += k;
  }
  return d;
}

Binomial Binomial::make(Monomial a, Monomial b) {
  if (a.exponents.size() != b.exponents.size()) throw InvalidArgument("binomial sides differ in length");
  for (std::size_t i = 0; i < a.exponents.size(); ++i) {
    const int common = std::min(a.exponents[i], b.exponents[i]);
    a.exponents[i] -= common;
    b.exponents[i] -= common;
  }
  if (a < b) std::swap(a, b);
  return Binomial{std::move(a), std::move(b)};
}

int Binomial::degree() const { return std::max(plus.total_degree(), minus.total_degree()); }

std::vector<int> Binomial::vector() const {
  std::vector<int> u(plus.exponents.size());
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = plus.exponents[i] - minus.exponents[i];
  return u;
}

bool is_homogeneous(const Graph& g, const Binomial& b) { return g_degree(g, b.plus) == g_degree(g, b.minus); }

Binomial binomial_from_walk(const Graph& g, const std::vector<int>& walk) {
  if (walk.empty() || walk.size() % 2 != 0) throw InvalidArgument("walk must have positive even length");
  for (int e : walk)
    if (e < 0 || e >= g.edge_count()) throw InvalidArgument("walk uses an unknown edge");
  // Try both endpoints of the first edge as the start vertex.
  const Edge& first = g.edge(walk.front());
  bool closed = false;
  for (int start : {first.u, first.v}) {
    int at = start;
    bool ok = true;
    for (int e : walk) {
      const Edge& ed = g.edge(e);
      if (ed.u == at) {
        at = ed.v;
      } else if (ed.v == at) {
        at = ed.u;
      } else {
        ok = false;
        break;
      }
    }
    if (ok && at == start) {
      closed = true;
      break;
    }
  }
  if (!closed) throw InvalidArgument("edges do not form a closed walk");
  Monomial odd = Monomial::one(g.edge_count());
  Monomial even = Monomial::one(g.edge_count());
  for (std::size_t k = 0; k < walk.size(); ++k) {
    (k % 2 == 0 ? odd : even).exponents[static_cast<std::size_t>(walk[k])] += 1;
  }
  return Binomial::make(std::move(odd), std::move(even));
}

Binomial binomial_from_cycle(const Graph& g, const EdgeCycle& c) { return binomial_from_walk(g, c.edges); }

Binomial binomial_from_circuit(const CircuitVector& c) {
  Monomial plus = Monomial::one(static_cast<int>(c.u.size()));
  Monomial minus = plus;
  for (std::size_t i = 0; i < c.u.size(); ++i) {
    if (c.u[i] > 0) plus.exponents[i] = c.u[i];
    if (c.u[i] < 0) minus.exponents[i] = -c.u[i];
  }
  return Binomial::make(std::move(plus), std::move(minus));
}

Polynomial to_polynomial(const Binomial& b) {
  Polynomial p;
  if (b.is_zero()) return p;
  p[b.plus] += 1;
  p[b.minus] -= 1;
  return p;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      auto& slot = out[ma * mb];
      slot += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

bool polynomial_in_ideal(const Graph& g, const Polynomial& p) {
  std::map<GDegree, mpq_class> sums;
  for (const auto& [mon, coeff] : p) sums[g_degree(g, mon)] += coeff;
  return std::all_of(sums.begin(), sums.end(), [](const auto& kv) { return kv.second == 0; });
}

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct FiberSearch {
  const Graph& g;
  std::vector<int> rem;
  std::vector<int> last_edge;  // per vertex (0-based), -1 when isolated
  std::vector<int> current;
  std::vector<Monomial> out;

  void run(int i) {
    if (i == g.edge_count()) {
      out.emplace_back(current);
      return;
    }
    const Edge& e = g.edge(i);
    const auto u = static_cast<std::size_t>(e.u - 1);
    const auto v = static_cast<std::size_t>(e.v - 1);
    for (int k = std::min(rem[u], rem[v]); k >= 0; --k) {
      rem[u] -= k;
      rem[v] -= k;
      const bool closes_ok = (last_edge[u] != i || rem[u] == 0) && (last_edge[v] != i || rem[v] == 0);
      if (closes_ok) {
        current[static_cast<std::size_t>(i)] = k;
        run(i + 1);
        current[static_cast<std::size_t>(i)] = 0;
      }
      rem[u] += k;
      rem[v] += k;
    }
  }
};

}  // namespace

Fiber enumerate_fiber(const Graph& g, const GDegree& b) {
  const int n = g.vertex_count();
  if (static_cast<int>(b.b.size()) != n) throw InvalidArgument("enumerate_fiber: degree has wrong length");
  for (int x : b.b)
    if (x < 0) throw InvalidArgument("enumerate_fiber: degree must be nonnegative");
  Fiber f;
  f.degree = b;
  FiberSearch s{g, b.b, std::vector<int>(static_cast<std::size_t>(n), -1),
                std::vector<int>(static_cast<std::size_t>(g.edge_count()), 0), {}};
  for (int i = 0; i < g.edge_count(); ++i) {
    s.last_edge[static_cast<std::size_t>(g.edge(i).u - 1)] = i;
    s.last_edge[static_cast<std::size_t>(g.edge(i).v - 1)] = i;
  }
  for (int v = 0; v < n; ++v) {
    if (s.last_edge[static_cast<std::size_t>(v)] == -1 && b.b[static_cast<std::size_t>(v)] != 0) return f;
  }
  s.run(0);
  f.members = std::move(s.out);
  f.component.assign(f.members.size(), 0);
  f.component_count = f.members.empty() ? 0 : 1;
  return f;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Fiber fiber_graph(Fiber f, const std::vector<Binomial>& generators) {
  std::unordered_map<std::vector<int>, int, VectorHash> index;
  index.reserve(f.members.size() * 2);
  for (std::size_t k = 0; k < f.members.size(); ++k) index.emplace(f.members[k].exponents, static_cast<int>(k));
  f.adjacency.clear();
  UnionFind uf(f.members.size());
  std::vector<int> moved;
  for (std::size_t k = 0; k < f.members.size(); ++k) {
    const Monomial& u = f.members[k];
    for (const Binomial& b : generators) {
      // every edge {u, v} has an endpoint divisible by the plus side
      if (b.is_zero() || !b.plus.divides(u)) continue;
      moved = u.exponents;
      for (std::size_t i = 0; i < moved.size(); ++i) moved[i] += b.minus.exponents[i] - b.plus.exponents[i];
      auto it = index.find(moved);
      if (it == index.end()) continue;
      const int a = static_cast<int>(k);
      const int c = it->second;
      f.adjacency.emplace_back(std::min(a, c), std::max(a, c));
      uf.unite(k, static_cast<std::size_t>(c));
    }
  }
  std::sort(f.adjacency.begin(), f.adjacency.end());
  f.adjacency.erase(std::unique(f.adjacency.begin(), f.adjacency.end()), f.adjacency.end());
  f.component.assign(f.members.size(), -1);
  std::vector<int> id_of_root(f.members.size(), -1);
  int next = 0;
  for (std::size_t k = 0; k < f.members.size(); ++k) {
    const std::size_t r = uf.find(k);
    if (id_of_root[r] == -1) id_of_root[r] = next++;
    f.component[k] = id_of_root[r];
  }
  f.component_count = next;
  f.connected = next <= 1;
  return f;
}

std::size_t GeneratingSet::indispensable_count() const {
  return static_cast<std::size_t>(std::count(indispensable.begin(), indispensable.end(), true));
}

bool GeneratingSet::all_quadratic() const {
  return std::all_of(binomials.begin(), binomials.end(), [](const Binomial& b) { return b.degree() == 2; });
}

namespace {

std::vector<EdgeCycle> all_even_cycles(const Graph& g) {
  std::optional<int> bound;
  if (g.vertex_count() > 12) bound = g.vertex_count() - g.vertex_count() % 2;
  return enumerate_even_cycles(g, bound);
}

/// Generator-degree data of a graph: the default bound and the degrees a
/// minimal generator may need (chordless even cycles for bipartite graphs,
/// circuits otherwise).
struct DegreeProfile {
  int default_bound = 2;
  std::vector<int> candidates;
};

DegreeProfile degree_profile(const Graph& g, bool bipartite, int circuit_cap) {
  DegreeProfile p;
  if (bipartite) {
    for (const EdgeCycle& c : all_even_cycles(g)) {
      const int d = static_cast<int>(c.length() / 2);
      p.default_bound = std::max(p.default_bound, d);
      if (!cycle_has_chord(g, c)) p.candidates.push_back(d);
    }
  } else {
    const auto cols = g.incidence_columns();
    for (const CircuitVector& c : circuits_bruteforce(cols, circuit_cap)) {
      p.default_bound = std::max(p.default_bound, c.degree());
      p.candidates.push_back(c.degree());
    }
  }
  return p;
}

/// Calls visit(monomial) for every monomial of total degree d in m variables,
/// in lexicographically decreasing order.
template <typename Visit>
void for_each_monomial(int m, int d, Visit&& visit) {
  std::vector<int> e(static_cast<std::size_t>(m), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == m - 1) {
      e[static_cast<std::size_t>(i)] = left;
      visit(e);
      e[static_cast<std::size_t>(i)] = 0;
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[static_cast<std::size_t>(i)] = k;
      self(self, i + 1, left - k);
    }
    e[static_cast<std::size_t>(i)] = 0;
  };
  if (m == 0) {
    if (d == 0) visit(e);
    return;
  }
  rec(rec, 0, d);
}

double monomial_count(int m, int d) {
  // C(m + d - 1, d)
  double c = 1;
  for (int k = 1; k <= d; ++k) c = c * (m + k - 1) / k;
  return c;
}

using DegreeBuckets = std::map<std::vector<int>, std::vector<Monomial>>;

DegreeBuckets bucket_by_degree(const Graph& g, int d, std::size_t cap) {
  if (monomial_count(g.edge_count(), d) > static_cast<double>(cap)) {
    throw CapExceeded("monomial enumeration of degree " + std::to_string(d) + " exceeds the cap of " +
                      std::to_string(cap));
  }
  DegreeBuckets buckets;
  std::vector<int> b(static_cast<std::size_t>(g.vertex_count()));
  for_each_monomial(g.edge_count(), d, [&](const std::vector<int>& e) {
    std::fill(b.begin(), b.end(), 0);
    for (int i = 0; i < g.edge_count(); ++i) {
      const int k = e[static_cast<std::size_t>(i)];
      if (k == 0) continue;
      b[static_cast<std::size_t>(g.edge(i).u - 1)] += k;
      b[static_cast<std::size_t>(g.edge(i).v - 1)] += k;
    }
    buckets[b].emplace_back(e);
  });
  return buckets;
}

}  // namespace

int default_degree_bound(const Graph& g, int circuit_cap) {
  return degree_profile(g, is_bipartite(g).has_value(), circuit_cap).default_bound;
}

GeneratingSet minimal_generating_set(const Graph& g, const GenerationOptions& opts) {
  const bool bipartite = is_bipartite(g).has_value();
  GeneratingSet gs;
  const DegreeProfile profile = degree_profile(g, bipartite, opts.circuit_cap);
  gs.degree_bound = opts.degree_bound.value_or(profile.default_bound);
  if (gs.degree_bound < 2) throw InvalidArgument("degree bound must be at least 2");
  for (int d : profile.candidates) {
    if (d > gs.degree_bound) {
      throw BoundTooSmall("degree bound " + std::to_string(gs.degree_bound) + " is below a candidate generator of degree " +
                          std::to_string(d));
    }
  }
  for (int d = 2; d <= gs.degree_bound; ++d) {
    DegreeBuckets buckets = bucket_by_degree(g, d, opts.monomial_cap);
    for (auto& [b, members] : buckets) {
      if (members.size() < 2) continue;
      Fiber f;
      f.degree = GDegree{b};
      f.members = std::move(members);
      f = fiber_graph(std::move(f), gs.binomials);
      gs.processed_degrees.push_back(f.degree);
      if (f.connected) continue;
      // members are decreasing, so the last one is the global minimum
      const int base = static_cast<int>(f.members.size()) - 1;
      std::vector<int> smallest(static_cast<std::size_t>(f.component_count), -1);
      for (int k = 0; k < static_cast<int>(f.members.size()); ++k) smallest[static_cast<std::size_t>(f.component[static_cast<std::size_t>(k)])] = k;
      const bool lone_pair = f.members.size() == 2 && f.adjacency.empty();
      std::vector<std::pair<Monomial, int>> reps;  // order extra components by their smallest member
      for (int c = 0; c < f.component_count; ++c) {
        if (c == f.component[static_cast<std::size_t>(base)]) continue;
        reps.emplace_back(f.members[static_cast<std::size_t>(smallest[static_cast<std::size_t>(c)])], c);
      }
      std::sort(reps.begin(), reps.end());
      for (const auto& [rep, c] : reps) {
        gs.binomials.push_back(Binomial::make(rep, f.members[static_cast<std::size_t>(base)]));
        gs.indispensable.push_back(lone_pair);
      }
    }
  }
  gs.bound_relative = !bipartite && !gs.all_quadratic();
  return gs;
}

bool is_quadratically_generated(const Graph& g, const GenerationOptions& opts) {
  return minimal_generating_set(g, opts).all_quadratic();
}

std::vector<Binomial> chordless_cycle_binomials(const Graph& g) {
  std::vector<Binomial> out;
  for (const EdgeCycle& c : all_even_cycles(g))
    if (!cycle_has_chord(g, c)) out.push_back(binomial_from_cycle(g, c));
  return out;
}

std::vector<Binomial> indispensable_binomials(const Graph& g, const GenerationOptions& opts) {
  const GeneratingSet gs = minimal_generating_set(g, opts);
  std::vector<Binomial> out;
  for (std::size_t k = 0; k < gs.binomials.size(); ++k)
    if (gs.indispensable[k]) out.push_back(gs.binomials[k]);
  if (is_bipartite(g)) {
    std::set<Binomial> mine(out.begin(), out.end());
    const auto cycles = chordless_cycle_binomials(g);
    std::set<Binomial> expected(cycles.begin(), cycles.end());
    if (mine != expected || gs.mu() != expected.size()) {
      throw ConsistencyError("indispensable binomials differ from the chordless even cycles");
    }
  }
  return out;
}

std::vector<Monomial> indispensable_monomials(const Graph& g, int degree_bound) {
  if (degree_bound < 2) throw InvalidArgument("degree bound must be at least 2");
  const std::size_t cap = GenerationOptions{}.monomial_cap;
  // monomials of N_G (not only its generators) seen so far, by exponent vector
  std::unordered_map<std::vector<int>, bool, VectorHash> in_ideal;
  std::vector<Monomial> out;
  for (int d = 2; d <= degree_bound; ++d) {
    DegreeBuckets buckets = bucket_by_degree(g, d, cap);
    std::vector<Monomial> level;
    for (auto& [b, members] : buckets) {
      for (Monomial& mon : members) {
        bool below = false;
        std::vector<int> lower = mon.exponents;
        for (std::size_t i = 0; i < lower.size() && !below; ++i) {
          if (lower[i] == 0) continue;
          --lower[i];
          auto it = in_ideal.find(lower);
          below = it != in_ideal.end() && it->second;
          ++lower[i];
        }
        const bool nontrivial = members.size() >= 2;
        if (nontrivial && !below) level.push_back(mon);
        if (nontrivial || below) in_ideal.emplace(mon.exponents, true);
      }
    }
    std::sort(level.begin(), level.end(), std::greater<>());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

bool multiple_has_both_divisibilities(const Graph& g, const EdgeCycle& cycle, const Polynomial& c) {
  if (cycle.length() != 4) throw InvalidArgument("expected a 4-cycle");
  const int m = g.edge_count();
  const Monomial ij = Monomial::from_support(m, {cycle.edges[0], cycle.edges[2]});
  const Monomial pq = Monomial::from_support(m, {cycle.edges[1], cycle.edges[3]});
  Polynomial f;
  f[ij] += 1;
  f[pq] -= 1;
  const Polynomial h = multiply(c, f);
  if (h.empty()) return true;
  bool has_ij = false;
  bool has_pq = false;
  for (const auto& [mon, coeff] : h) {
    has_ij = has_ij || ij.divides(mon);
    has_pq = has_pq || pq.divides(mon);
  }
  return has_ij && has_pq;
}

bool sample_multiple_divisibility(const Graph& g, const EdgeCycle& cycle, int trials, std::uint64_t seed) {
  if (cycle.length() != 4) throw InvalidArgument("sample_multiple_divisibility: cycle must have length 4");
  cycle_has_chord(g, cycle);  // validates the cycle
  const InducedSubgraph h = induced_subgraph(g, cycle.vertices);
  if (h.graph.edge_count() == 6) {
    throw InvalidArgument("sample_multiple_divisibility: induced subgraph on the cycle is complete");
  }
  static const std::vector<mpq_class> coefficients{mpq_class(1), mpq_class(-1), mpq_class(2),
                                                    mpq_class(-2), mpq_class(1, 2), mpq_class(-3, 2)};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> term_count(1, 5);
  std::uniform_int_distribution<int> exponent(0, 3);
  std::uniform_int_distribution<std::size_t> coeff_pick(0, coefficients.size() - 1);
  for (int t = 0; t < trials; ++t) {
    Polynomial c;
    while (c.empty()) {
      const int terms = term_count(rng);
      for (int k = 0; k < terms; ++k) {
        Monomial mon = Monomial::one(g.edge_count());
        for (int e : h.edge_map) mon.exponents[static_cast<std::size_t>(e)] = exponent(rng);
        c[mon] += coefficients[coeff_pick(rng)];
      }
      std::erase_if(c, [](const auto& kv) { return kv.second == 0; });
    }
    if (!multiple_has_both_divisibilities(g, cycle, c)) return false;
  }
  return true;
}

std::string to_string(const Graph& g, const Monomial& mon) {
  std::string s;
  for (std::size_t i = 0; i < mon.exponents.size(); ++i) {
    const int k = mon.exponents[i];
    if (k == 0) continue;
    if (!s.empty()) s += "*";
    s += g.variable_name(static_cast<int>(i));
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const Graph& g, const Binomial& b) {
  if (b.is_zero()) return "0";
  return to_string(g, b.plus) + " - " + to_string(g, b.minus);
}

}  // namespace toric
