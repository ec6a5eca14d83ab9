#include "toricrank/invariants.hpp"

#include <algorithm>

namespace toric {

long height(const Graph& g) {
  const auto cols = g.incidence_columns();
  const long h = g.edge_count() - integer_rank(cols);
  const long expected = is_bipartite(g) ? g.edge_count() - g.vertex_count() + 1 : g.edge_count() - g.vertex_count();
  if (h != expected) throw ConsistencyError("height differs from the bipartite/non-bipartite formula");
  return h;
}

bool extremality_check(const Graph& g) {
  const auto cols = g.incidence_columns();
  for (std::size_t j = 0; j < cols.size(); ++j) {
    std::vector<Column> rest;
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (k != j) rest.push_back(cols[k]);
    std::vector<mpq_class> b(cols[j].begin(), cols[j].end());
    if (vector_in_cone(b, rest)) return false;
  }
  return true;
}

namespace {

std::set<int> clip(std::set<int> dims, int dim) {
  std::erase_if(dims, [&](int j) { return j > dim; });
  return dims;
}

DeltaValue delta_or_zero(const DeltaComplex& d, const std::set<int>& dims) {
  if (dims.empty()) return DeltaValue{0, JMatching{dims, {}}};
  return delta_value(d, dims);
}

}  // namespace

Analysis analyze(const Graph& g, const AnalysisOptions& opts) {
  Analysis a;
  InvariantReport& r = a.report;
  r.m = g.edge_count();
  r.n = g.vertex_count();
  r.bipartite = is_bipartite(g).has_value();
  r.height = height(g);

  const auto cols = g.incidence_columns();
  a.circuits = circuits_bruteforce(cols, opts.circuit_cap);

  GenerationOptions gen;
  gen.degree_bound = opts.degree_bound;
  gen.circuit_cap = opts.circuit_cap;
  a.generators = minimal_generating_set(g, gen);
  r.mu = static_cast<long>(a.generators.mu());
  r.degree_bound = a.generators.degree_bound;
  r.mu_bound_relative = a.generators.bound_relative;
  r.quadratic_generated = a.generators.all_quadratic();
  r.indispensable_count = static_cast<long>(a.generators.indispensable_count());

  BuildOptions build;
  build.circuit_cap = opts.circuit_cap;
  build.max_face_card = opts.max_face_card;
  a.delta = build_delta(g, a.circuits, build);
  r.c_min_count = static_cast<int>(a.delta.vertices.size());
  for (const SubComplex& c : delta_components(a.delta)) {
    switch (classify_component(c)) {
      case ComponentShape::Edge:
        ++r.component_census.edges;
        break;
      case ComponentShape::TwoSimplex:
        ++r.component_census.two_simplices;
        break;
      case ComponentShape::Other:
        ++r.component_census.other;
        break;
    }
  }
  const int dim = a.delta.dimension();
  a.delta01 = delta_or_zero(a.delta, clip({0, 1}, dim));
  a.delta_omega = delta_or_zero(a.delta, omega(a.delta));
  r.delta01 = a.delta01.value;
  r.delta_omega = a.delta_omega.value;

  if (r.bipartite || r.quadratic_generated) {
    r.bar = {r.mu, r.mu};
    r.ara_g = {r.mu, r.mu};
  } else {
    r.bar = {std::max(r.delta01, r.height), r.mu};
    r.ara_g = {std::max(r.delta_omega, r.height), r.mu};
  }
  r.ara_bracket = {r.height, std::min<long>(r.mu, r.m)};
  r.complete_intersection = r.height == r.mu;
  return a;
}

InvariantReport report(const Graph& g, const AnalysisOptions& opts) { return analyze(g, opts).report; }

KnExpected kn_expected(int n) {
  if (n < 4) throw InvalidArgument("kn_expected: n must be at least 4");
  const long nn = n;
  const long c4 = nn * (nn - 1) * (nn - 2) * (nn - 3) / 24;
  KnExpected e;
  e.mu = nn * (nn - 1) * (nn - 2) * (nn - 3) / 12;
  e.height = nn * (nn - 3) / 2;
  e.vertices = 3 * c4;
  e.components = c4;
  e.indispensable = 0;
  e.bar = e.mu;
  e.ara_g = e.mu;
  return e;
}

}  // namespace toric
