#pragma once

#include <optional>
#include <string>

#include "toricrank/complex.hpp"
#include "toricrank/graph.hpp"
#include "toricrank/ideal.hpp"

namespace toric {

/// Closed integer interval [lo, hi]; exact when lo == hi.
struct Interval {
  long lo = 0;
  long hi = 0;

  bool exact() const { return lo == hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct ComponentCensus {
  int edges = 0;
  int two_simplices = 0;
  int other = 0;
};

struct InvariantReport {
  int m = 0;
  int n = 0;
  bool bipartite = false;
  bool quadratic_generated = false;
  long height = 0;
  long mu = 0;
  bool mu_bound_relative = false;
  int degree_bound = 0;
  long delta01 = 0;
  long delta_omega = 0;
  Interval bar;
  Interval ara_g;
  Interval ara_bracket;
  bool complete_intersection = false;
  ComponentCensus component_census;
  long indispensable_count = 0;
  int c_min_count = 0;
};

struct AnalysisOptions {
  std::optional<int> degree_bound;
  int circuit_cap = 24;
  int max_face_card = 8;
};

/// ht(I_G) = m - rank(M_G), cross-checked against m - n + 1 (bipartite) and
/// m - n (otherwise).
long height(const Graph& g);

/// Every column a_j lies outside the cone of the remaining columns.
bool extremality_check(const Graph& g);

/// Everything the analysis computes on the way to the report.
struct Analysis {
  std::vector<CircuitVector> circuits;
  GeneratingSet generators;
  DeltaComplex delta;
  DeltaValue delta01;
  DeltaValue delta_omega;
  InvariantReport report;
};

Analysis analyze(const Graph& g, const AnalysisOptions& opts = {});
InvariantReport report(const Graph& g, const AnalysisOptions& opts = {});

/// Closed-form values for K_n.
struct KnExpected {
  long mu = 0;
  long height = 0;
  long vertices = 0;
  long components = 0;
  long indispensable = 0;
  long bar = 0;
  long ara_g = 0;
};

KnExpected kn_expected(int n);

}  // namespace toric
