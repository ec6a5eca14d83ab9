#include "toricrank/json_io.hpp"

namespace toric {

namespace {

Json interval(const Interval& i) { return Json::array({i.lo, i.hi}); }

Json one_based(const std::vector<int>& edges) {
  Json out = Json::array();
  for (int e : edges) out.push_back(e + 1);
  return out;
}

}  // namespace

Json to_json(const InvariantReport& r) {
  Json j;
  j["m"] = r.m;
  j["n"] = r.n;
  j["bipartite"] = r.bipartite;
  j["quadratic_generated"] = r.quadratic_generated;
  j["height"] = r.height;
  j["mu"] = r.mu;
  j["mu_bound_relative"] = r.mu_bound_relative;
  j["degree_bound"] = r.degree_bound;
  j["delta01"] = r.delta01;
  j["deltaOmega"] = r.delta_omega;
  j["bar"] = r.bar.exact() ? Json(r.bar.lo) : interval(r.bar);
  j["araG"] = r.ara_g.exact() ? Json(r.ara_g.lo) : interval(r.ara_g);
  j["ara_bracket"] = interval(r.ara_bracket);
  j["complete_intersection"] = r.complete_intersection;
  j["component_census"] = Json{{"edge", r.component_census.edges},
                               {"two_simplex", r.component_census.two_simplices},
                               {"other", r.component_census.other}};
  j["indispensable_count"] = r.indispensable_count;
  j["c_min_count"] = r.c_min_count;
  return j;
}

Json complex_to_json(const DeltaComplex& d, const std::vector<std::set<int>>& j_sets) {
  Json j;
  j["vertices"] = Json::array();
  for (const SupportSet& e : d.vertices) j["vertices"].push_back(one_based(e));
  j["faces"] = d.faces;
  j["components"] = Json::array();
  for (const SubComplex& c : delta_components(d)) {
    j["components"].push_back(Json{{"vertices", c.vertices}, {"shape", to_string(classify_component(c))}});
  }
  j["dimension"] = d.dimension();
  j["delta"] = Json::array();
  for (const auto& dims : j_sets) {
    DeltaValue v = delta_value(d, dims);
    j["delta"].push_back(Json{{"J", dims}, {"value", v.value}, {"witness", v.witness.faces}});
  }
  return j;
}

Json fiber_to_json(const Fiber& f) {
  Json j = Json::array();
  for (const Monomial& mon : f.members) j.push_back(mon.exponents);
  return j;
}

Json binomials_to_json(const Graph& g, const std::vector<Binomial>& bs, const std::vector<bool>& indispensable) {
  Json out = Json::array();
  for (std::size_t k = 0; k < bs.size(); ++k) {
    Json b{{"text", to_string(g, bs[k])}, {"plus", bs[k].plus.exponents}, {"minus", bs[k].minus.exponents}};
    if (k < indispensable.size()) b["indispensable"] = static_cast<bool>(indispensable[k]);
    out.push_back(std::move(b));
  }
  return out;
}

Json circuits_to_json(const Graph& g, const std::vector<CircuitVector>& cs) {
  Json out = Json::array();
  for (const CircuitVector& c : cs) {
    out.push_back(Json{{"u", c.u}, {"support", one_based(c.support())}, {"binomial", to_string(g, binomial_from_circuit(c))}});
  }
  return out;
}

Json cycles_to_json(const Graph& g, const std::vector<EdgeCycle>& cs) {
  Json out = Json::array();
  for (const EdgeCycle& c : cs) {
    out.push_back(Json{{"vertices", c.vertices},
                       {"edges", one_based(c.edges)},
                       {"chord", cycle_has_chord(g, c)},
                       {"binomial", to_string(g, binomial_from_cycle(g, c))}});
  }
  return out;
}

Json document(const char* kind, Json payload) {
  Json j;
  j["schema"] = kJsonSchemaVersion;
  j["kind"] = kind;
  j["result"] = std::move(payload);
  return j;
}

}  // namespace toric
