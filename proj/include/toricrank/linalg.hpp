#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

#include "toricrank/error.hpp"

namespace toric {

using Column = std::vector<int>;

/// Integer kernel vector of the incidence matrix with inclusion-minimal
/// support, coprime entries, and a positive entry at its smallest index.
struct CircuitVector {
  std::vector<int> u;

  std::vector<int> support() const;
  std::vector<int> positive_support() const;
  std::vector<int> negative_support() const;
  /// Bitmask of the support (edge i <-> bit i).
  std::uint64_t support_mask() const;
  /// Total degree of the positive part, i.e. the degree of its binomial.
  int degree() const;

  friend bool operator==(const CircuitVector&, const CircuitVector&) = default;
};

/// Rank over Q by fraction-free (Bareiss) elimination.
int integer_rank(std::span<const Column> cols);

inline constexpr int kDefaultCircuitCap = 16;

/// All circuits of the column configuration, as minimal dependent column
/// sets. The search only extends independent sets, so every superset of a
/// dependent set is skipped. Output is sorted by support bitmask. Throws
/// CapExceeded when there are more than `cap` columns (cap <= 64).
std::vector<CircuitVector> circuits_bruteforce(std::span<const Column> cols, int cap = kDefaultCircuitCap);

inline constexpr int kDefaultLpVariableCap = 64;

/// Exact feasibility of { x >= 0 : A x = b } over Q (phase-1 simplex with
/// Bland's rule). A is row-major with `rows` rows.
bool nonnegative_solution_exists(const std::vector<std::vector<mpq_class>>& a, const std::vector<mpq_class>& b);

/// True iff strictly positive λ_{E,i} exist with Σ_{i∈E} λ_{E,i} a_i equal for
/// every E in `supports`. Throws CapExceeded above `variable_cap` unknowns.
bool relint_intersection_feasible(const std::vector<std::vector<int>>& supports, std::span<const Column> cols,
                                  int variable_cap = kDefaultLpVariableCap);

/// True iff b is a nonnegative rational combination of cols.
bool vector_in_cone(const std::vector<mpq_class>& b, std::span<const Column> cols);

}  // namespace toric
