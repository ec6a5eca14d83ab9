#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toricrank/graph.hpp"
#include "toricrank/linalg.hpp"

namespace toric {

/// Exponent vector x^u over the edge variables. Ordered lexicographically.
struct Monomial {
  std::vector<int> exponents;

  Monomial() = default;
  explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}
  static Monomial one(int m) { return Monomial(std::vector<int>(static_cast<std::size_t>(m), 0)); }
  /// Squarefree monomial on the given (0-based) edge indices.
  static Monomial from_support(int m, const std::vector<int>& edges);

  int total_degree() const;
  std::vector<int> support() const;
  bool divides(const Monomial& other) const;
  bool is_one() const { return total_degree() == 0; }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);

/// G-degree M_G · u, a vector in N^n.
struct GDegree {
  std::vector<int> b;

  int total() const;
  friend auto operator<=>(const GDegree&, const GDegree&) = default;
  friend bool operator==(const GDegree&, const GDegree&) = default;
};

GDegree g_degree(const Graph& g, const Monomial& mon);

/// x^plus - x^minus with disjoint supports and plus lexicographically larger.
/// The zero binomial (plus == minus == 1) marks a degenerate walk.
struct Binomial {
  Monomial plus;
  Monomial minus;

  /// Cancels common factors and orders the two sides.
  static Binomial make(Monomial a, Monomial b);

  bool is_zero() const { return plus == minus; }
  /// max of the two total degrees (they agree for homogeneous binomials).
  int degree() const;
  /// Exponent vector u = plus - minus.
  std::vector<int> vector() const;

  friend auto operator<=>(const Binomial&, const Binomial&) = default;
  friend bool operator==(const Binomial&, const Binomial&) = default;
};

bool is_homogeneous(const Graph& g, const Binomial& b);

/// Alternating product binomial of an even closed walk given by its edges.
/// Throws InvalidArgument for odd or non-closed walks; a walk whose two
/// products coincide yields the zero binomial.
Binomial binomial_from_walk(const Graph& g, const std::vector<int>& walk);

/// f_Γ for a cycle.
Binomial binomial_from_cycle(const Graph& g, const EdgeCycle& c);
Binomial binomial_from_circuit(const CircuitVector& c);

/// Sparse polynomial with exact rational coefficients.
using Polynomial = std::map<Monomial, mpq_class>;

Polynomial to_polynomial(const Binomial& b);
Polynomial multiply(const Polynomial& a, const Polynomial& b);

/// True iff p lies in I_G: the coefficients of every G-degree class sum to zero.
bool polynomial_in_ideal(const Graph& g, const Polynomial& p);

/// The set deg_G^{-1}(b) and, once fiber_graph has run, the graph S(b)_F.
struct Fiber {
  GDegree degree;
  std::vector<Monomial> members;  // lexicographically decreasing
  std::vector<std::pair<int, int>> adjacency;
  std::vector<int> component;     // component id per member, ids ordered by first member
  int component_count = 0;
  bool connected = true;

  std::size_t size() const { return members.size(); }
};

/// All solutions of M_G u = b over N^m.
Fiber enumerate_fiber(const Graph& g, const GDegree& b);

/// Fills adjacency and connectivity of S(b)_F: x^u ~ x^v whenever
/// x^u - x^v is a monomial multiple of ±f for some f in F.
Fiber fiber_graph(Fiber f, const std::vector<Binomial>& generators);

struct GenerationOptions {
  std::optional<int> degree_bound;   // default chosen per graph class
  int circuit_cap = 24;              // columns allowed in circuit enumeration
  std::size_t monomial_cap = 20'000'000;
};

struct GeneratingSet {
  std::vector<Binomial> binomials;
  std::vector<bool> indispensable;
  int degree_bound = 0;
  /// True when no structural theorem pins the generator degrees
  /// (non-bipartite and not quadratically generated).
  bool bound_relative = false;
  /// Every G-degree with a fiber of size >= 2 that was processed.
  std::vector<GDegree> processed_degrees;

  std::size_t mu() const { return binomials.size(); }
  std::size_t indispensable_count() const;
  bool all_quadratic() const;
};

/// Default bound: bipartite -> half the longest even cycle, otherwise the
/// largest circuit degree; at least 2.
int default_degree_bound(const Graph& g, int circuit_cap = GenerationOptions{}.circuit_cap);

/// Degree-by-degree minimal generation through fiber-graph connectivity.
/// Throws BoundTooSmall when a candidate generator degree exceeds the bound.
GeneratingSet minimal_generating_set(const Graph& g, const GenerationOptions& opts = {});

bool is_quadratically_generated(const Graph& g, const GenerationOptions& opts = {});

/// Indispensable-flagged subset of the minimal generating set. For bipartite
/// graphs it is checked against { f_Γ : Γ a chordless even cycle }.
std::vector<Binomial> indispensable_binomials(const Graph& g, const GenerationOptions& opts = {});

/// Minimal generators of N_G among monomials of total degree <= D.
std::vector<Monomial> indispensable_monomials(const Graph& g, int degree_bound);

/// Binomials f_Γ of the chordless even cycles, in cycle order.
std::vector<Binomial> chordless_cycle_binomials(const Graph& g);

/// True iff H = C f_Γ has a monomial divisible by x_i x_j and one divisible by
/// x_p x_q, where Γ = (e_i, e_p, e_j, e_q). H = 0 returns true.
bool multiple_has_both_divisibilities(const Graph& g, const EdgeCycle& cycle, const Polynomial& c);

/// Draws `trials` random multipliers C over the edge variables of the induced
/// subgraph on Γ and checks multiple_has_both_divisibilities for each.
/// Throws InvalidArgument unless Γ is a 4-cycle whose induced subgraph is not
/// complete.
bool sample_multiple_divisibility(const Graph& g, const EdgeCycle& cycle, int trials, std::uint64_t seed);

std::string to_string(const Graph& g, const Monomial& mon);
std::string to_string(const Graph& g, const Binomial& b);

}  // namespace toric
