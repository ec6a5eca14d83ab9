#include "toricrank/complex.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

namespace toric {

std::vector<SupportSet> compute_c_min(std::span<const CircuitVector> circuits) {
  std::vector<SupportSet> all;
  auto add = [&](SupportSet s) {
    if (std::find(all.begin(), all.end(), s) == all.end()) all.push_back(std::move(s));
  };
  for (const CircuitVector& c : circuits) {
    add(c.positive_support());
    add(c.negative_support());
  }
  std::vector<SupportSet> minimal;
  for (const SupportSet& e : all) {
    const bool has_smaller = std::any_of(all.begin(), all.end(), [&](const SupportSet& f) {
      return f.size() < e.size() && std::includes(e.begin(), e.end(), f.begin(), f.end());
    });
    if (!has_smaller) minimal.push_back(e);
  }
  return minimal;
}

std::vector<SupportSet> compute_c_min(const Graph& g, int circuit_cap) {
  const auto cols = g.incidence_columns();
  const auto circuits = circuits_bruteforce(cols, circuit_cap);
  return compute_c_min(circuits);
}

int DeltaComplex::dimension() const {
  int dim = -1;
  for (const Face& f : faces) dim = std::max(dim, static_cast<int>(f.size()) - 1);
  return dim;
}

bool DeltaComplex::is_face(const Face& f) const {
  if (f.empty()) return true;
  Face sorted = f;
  std::sort(sorted.begin(), sorted.end());
  return std::binary_search(faces.begin(), faces.end(), sorted, [](const Face& a, const Face& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
}

namespace {

std::uint64_t vertex_cover(const Graph& g, const SupportSet& e) {
  std::uint64_t mask = 0;
  for (int i : e) {
    mask |= std::uint64_t{1} << (g.edge(i).u - 1);
    mask |= std::uint64_t{1} << (g.edge(i).v - 1);
  }
  return mask;
}

bool face_less(const Face& a, const Face& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<std::vector<int>> face_supports(const DeltaComplex& d, const Face& f) {
  std::vector<std::vector<int>> out;
  out.reserve(f.size());
  for (int v : f) out.push_back(d.vertices[static_cast<std::size_t>(v)]);
  return out;
}

}  // namespace

DeltaComplex build_delta(const Graph& g, const BuildOptions& opts) {
  const auto cols = g.incidence_columns();
  const auto circuits = circuits_bruteforce(cols, opts.circuit_cap);
  return build_delta(g, circuits, opts);
}

DeltaComplex build_delta(const Graph& g, std::span<const CircuitVector> circuits, const BuildOptions& opts) {
  if (g.vertex_count() > 64) throw CapExceeded("build_delta: more than 64 graph vertices");
  const auto cols = g.incidence_columns();
  DeltaComplex d;
  d.vertices = compute_c_min(circuits);
  const int nv = static_cast<int>(d.vertices.size());
  std::map<SupportSet, int> index_of;
  for (int i = 0; i < nv; ++i) index_of.emplace(d.vertices[static_cast<std::size_t>(i)], i);

  // {E, E'} pairs certified by a circuit with those two supports
  std::set<std::pair<int, int>> circuit_pairs;
  for (const CircuitVector& c : circuits) {
    auto p = index_of.find(c.positive_support());
    auto q = index_of.find(c.negative_support());
    if (p != index_of.end() && q != index_of.end()) {
      circuit_pairs.emplace(std::min(p->second, q->second), std::max(p->second, q->second));
    }
  }

  std::vector<std::uint64_t> cover(static_cast<std::size_t>(nv));
  for (int i = 0; i < nv; ++i) cover[static_cast<std::size_t>(i)] = vertex_cover(g, d.vertices[static_cast<std::size_t>(i)]);

  std::vector<Face> level;
  for (int i = 0; i < nv; ++i) level.push_back({i});
  d.faces = level;

  // Pairs. A strictly positive combination over E is supported exactly on the
  // vertices E covers, so faces need equal covers.
  std::vector<Face> pairs;
  for (int i = 0; i < nv; ++i) {
    for (int j = i + 1; j < nv; ++j) {
      bool face = false;
      if (cover[static_cast<std::size_t>(i)] == cover[static_cast<std::size_t>(j)]) {
        face = relint_intersection_feasible(face_supports(d, {i, j}), cols, opts.lp_variable_cap);
      }
      if (face != circuit_pairs.contains({i, j})) {
        throw ConsistencyError("Δ edge test disagrees with the circuit rule on a vertex pair");
      }
      if (face) pairs.push_back({i, j});
    }
  }
  level = std::move(pairs);
  std::set<Face> current(level.begin(), level.end());
  int card = 2;
  while (!level.empty()) {
    if (card > opts.max_face_card) {
      throw CapExceeded("Δ has faces of cardinality above the cap of " + std::to_string(opts.max_face_card));
    }
    d.faces.insert(d.faces.end(), level.begin(), level.end());
    // Candidates: join faces sharing all but their last vertex, keep those whose
    // facets are all faces.
    std::vector<Face> next;
    for (std::size_t a = 0; a < level.size(); ++a) {
      for (std::size_t b = a + 1; b < level.size(); ++b) {
        if (!std::equal(level[a].begin(), level[a].end() - 1, level[b].begin())) break;
        Face cand = level[a];
        cand.push_back(level[b].back());
        if (cover[static_cast<std::size_t>(cand.front())] != cover[static_cast<std::size_t>(cand.back())]) continue;
        bool facets_ok = true;
        for (std::size_t drop = 0; drop + 2 < cand.size() && facets_ok; ++drop) {
          Face facet = cand;
          facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(drop));
          facets_ok = current.contains(facet);
        }
        if (!facets_ok) continue;
        if (card + 1 > opts.max_face_card) {
          throw CapExceeded("Δ has faces of cardinality above the cap of " + std::to_string(opts.max_face_card));
        }
        if (relint_intersection_feasible(face_supports(d, cand), cols, opts.lp_variable_cap)) next.push_back(cand);
      }
    }
    level = std::move(next);
    current = std::set<Face>(level.begin(), level.end());
    ++card;
  }
  std::sort(d.faces.begin(), d.faces.end(), face_less);

  // components through shared faces
  std::vector<int> parent(static_cast<std::size_t>(nv));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const Face& f : d.faces) {
    for (std::size_t k = 1; k < f.size(); ++k) {
      int a = find(f[0]);
      int b = find(f[k]);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < nv; ++v) groups[find(v)].push_back(v);
  for (auto& [root, members] : groups) d.components.push_back(std::move(members));
  std::sort(d.components.begin(), d.components.end());
  return d;
}

std::vector<SubComplex> delta_components(const DeltaComplex& d) {
  std::vector<int> comp_of(d.vertices.size(), -1);
  for (std::size_t c = 0; c < d.components.size(); ++c)
    for (int v : d.components[c]) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
  std::vector<SubComplex> out(d.components.size());
  for (std::size_t c = 0; c < d.components.size(); ++c) out[c].vertices = d.components[c];
  for (const Face& f : d.faces) out[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(f.front())])].faces.push_back(f);
  return out;
}

ComponentShape classify_component(const SubComplex& c) {
  auto has = [&](const Face& f) { return std::find(c.faces.begin(), c.faces.end(), f) != c.faces.end(); };
  if (c.vertices.size() == 2 && c.faces.size() == 3 && has(c.vertices)) return ComponentShape::Edge;
  if (c.vertices.size() == 3 && c.faces.size() == 7 && has(c.vertices)) return ComponentShape::TwoSimplex;
  return ComponentShape::Other;
}

std::string to_string(ComponentShape s) {
  switch (s) {
    case ComponentShape::Edge:
      return "edge";
    case ComponentShape::TwoSimplex:
      return "two_simplex";
    case ComponentShape::Other:
      break;
  }
  return "other";
}

namespace {

/// Exact max-coverage / min-cardinality J-matching search on one component.
/// Vertices are decided in increasing order; at each vertex the faces whose
/// smallest vertex it is are tried in lexicographic order before leaving it
/// uncovered, so the first optimum found is the lexicographically smallest.
class MatchingSearch {
 public:
  MatchingSearch(const SubComplex& c, const std::set<int>& dims, std::size_t face_cap) : vertices_(c.vertices) {
    for (std::size_t k = 0; k < vertices_.size(); ++k) local_[vertices_[k]] = static_cast<int>(k);
    starting_.resize(vertices_.size());
    std::vector<Face> usable;
    for (const Face& f : c.faces)
      if (dims.contains(static_cast<int>(f.size()) - 1)) usable.push_back(f);
    if (usable.size() > face_cap) {
      throw CapExceeded("J-matching search: " + std::to_string(usable.size()) + " faces exceed the cap of " +
                        std::to_string(face_cap));
    }
    std::sort(usable.begin(), usable.end());
    for (const Face& f : usable) {
      Face local;
      for (int v : f) local.push_back(local_.at(v));
      max_size_ = std::max(max_size_, static_cast<int>(local.size()));
      starting_[static_cast<std::size_t>(local.front())].push_back(std::move(local));
    }
    used_.assign(vertices_.size(), 0);
  }

  DeltaValue run(const std::set<int>& dims) {
    dfs(0, 0, 0);
    DeltaValue out;
    out.value = best_count_ < 0 ? 0 : best_count_;
    out.witness.dims = dims;
    for (const Face& f : best_) {
      Face parent;
      for (int v : f) parent.push_back(vertices_[static_cast<std::size_t>(v)]);
      out.witness.faces.push_back(std::move(parent));
    }
    return out;
  }

 private:
  void dfs(std::size_t pos, int covered, int count) {
    while (pos < vertices_.size() && used_[pos]) ++pos;
    int free_left = 0;
    for (std::size_t k = pos; k < vertices_.size(); ++k) free_left += used_[k] ? 0 : 1;
    const int reach = covered + free_left;
    if (reach < best_cov_) return;
    if (reach == best_cov_ && best_count_ >= 0) {
      const int need = max_size_ > 0 ? (free_left + max_size_ - 1) / max_size_ : 0;
      if (count + need >= best_count_) return;
    }
    if (pos == vertices_.size()) {
      if (covered > best_cov_ || (covered == best_cov_ && count < best_count_)) {
        best_cov_ = covered;
        best_count_ = count;
        best_ = chosen_;
      }
      return;
    }
    for (const Face& f : starting_[pos]) {
      if (std::any_of(f.begin(), f.end(), [&](int v) { return used_[static_cast<std::size_t>(v)] != 0; })) continue;
      for (int v : f) used_[static_cast<std::size_t>(v)] = 1;
      chosen_.push_back(f);
      dfs(pos + 1, covered + static_cast<int>(f.size()), count + 1);
      chosen_.pop_back();
      for (int v : f) used_[static_cast<std::size_t>(v)] = 0;
    }
    // leave pos uncovered
    used_[pos] = 2;
    dfs(pos + 1, covered, count);
    used_[pos] = 0;
  }

  std::vector<int> vertices_;
  std::map<int, int> local_;
  std::vector<std::vector<Face>> starting_;
  std::vector<char> used_;
  std::vector<Face> chosen_;
  std::vector<Face> best_;
  int max_size_ = 0;
  int best_cov_ = -1;
  int best_count_ = -1;
};

}  // namespace

DeltaValue delta_value(const SubComplex& c, const std::set<int>& dims, std::size_t face_cap) {
  if (dims.empty()) throw InvalidArgument("delta_value: J must be nonempty");
  MatchingSearch search(c, dims, face_cap);
  return search.run(dims);
}

DeltaValue delta_value(const DeltaComplex& d, const std::set<int>& dims, std::size_t face_cap) {
  if (dims.empty()) throw InvalidArgument("delta_value: J must be nonempty");
  const int dim = d.dimension();
  for (int j : dims) {
    if (j < 0 || j > dim) throw InvalidArgument("delta_value: J must be a subset of {0, ..., dim Δ}");
  }
  DeltaValue total;
  total.witness.dims = dims;
  for (const SubComplex& c : delta_components(d)) {
    DeltaValue part = delta_value(c, dims, face_cap);
    total.value += part.value;
    for (Face& f : part.witness.faces) total.witness.faces.push_back(std::move(f));
  }
  return total;
}

std::set<int> omega(const DeltaComplex& d) {
  std::set<int> out;
  for (int j = 0; j <= d.dimension(); ++j) out.insert(j);
  return out;
}

}  // namespace toric
