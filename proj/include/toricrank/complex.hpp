#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "toricrank/graph.hpp"
#include "toricrank/linalg.hpp"

namespace toric {

/// Set of 0-based edge indices; the vertices of Δ_G.
using SupportSet = std::vector<int>;
/// Sorted list of vertex indices of a complex.
using Face = std::vector<int>;

/// Inclusion-minimal positive/negative circuit supports. Ordered by first
/// appearance along the circuit list (sorted by support bitmask), positive
/// part before negative part.
std::vector<SupportSet> compute_c_min(const Graph& g, int circuit_cap = 24);
std::vector<SupportSet> compute_c_min(std::span<const CircuitVector> circuits);

/// Δ_G: faces are vertex sets whose relative cone interiors meet.
struct DeltaComplex {
  std::vector<SupportSet> vertices;
  std::vector<Face> faces;  // sorted by (cardinality, lexicographic); includes singletons
  std::vector<std::vector<int>> components;  // vertex indices, ordered by smallest vertex

  /// Largest face dimension; -1 for the empty complex.
  int dimension() const;
  bool is_face(const Face& f) const;
};

struct BuildOptions {
  int circuit_cap = 24;
  int max_face_card = 8;
  int lp_variable_cap = kDefaultLpVariableCap;
};

/// Builds Δ_G. Faces are found level by level; a set is tested only when all
/// its facets are faces. Pairs are cross-checked against the circuit rule
/// ({E,E'} is an edge iff some circuit has supports E and E').
DeltaComplex build_delta(const Graph& g, const BuildOptions& opts = {});
DeltaComplex build_delta(const Graph& g, std::span<const CircuitVector> circuits, const BuildOptions& opts = {});

/// Component of Δ_G with faces inherited from the parent (parent indices).
struct SubComplex {
  std::vector<int> vertices;
  std::vector<Face> faces;
};

std::vector<SubComplex> delta_components(const DeltaComplex& d);

enum class ComponentShape { Edge, TwoSimplex, Other };

ComponentShape classify_component(const SubComplex& c);
std::string to_string(ComponentShape s);

/// Pairwise-disjoint faces with dimensions in J.
struct JMatching {
  std::set<int> dims;
  std::vector<Face> faces;
};

struct DeltaValue {
  int value = 0;
  JMatching witness;
};

inline constexpr std::size_t kDefaultMatchingFaceCap = 20000;

/// δ(Δ)_J: the least number of faces among J-matchings of maximum vertex
/// coverage, summed over components. The witness is the lexicographically
/// smallest optimal face list per component, concatenated by component.
DeltaValue delta_value(const DeltaComplex& d, const std::set<int>& dims,
                       std::size_t face_cap = kDefaultMatchingFaceCap);

/// Same search on one component.
DeltaValue delta_value(const SubComplex& c, const std::set<int>& dims,
                       std::size_t face_cap = kDefaultMatchingFaceCap);

/// Ω = {0, ..., dim Δ}.
std::set<int> omega(const DeltaComplex& d);

}  // namespace toric
