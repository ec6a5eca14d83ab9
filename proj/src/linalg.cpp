#include "toricrank/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <string>

namespace toric {

std::vector<int> CircuitVector::support() const {
  std::vector<int> s;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != 0) s.push_back(static_cast<int>(i));
  return s;
}

std::vector<int> CircuitVector::positive_support() const {
  std::vector<int> s;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] > 0) s.push_back(static_cast<int>(i));
  return s;
}

std::vector<int> CircuitVector::negative_support() const {
  std::vector<int> s;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] < 0) s.push_back(static_cast<int>(i));
  return s;
}

std::uint64_t CircuitVector::support_mask() const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != 0) mask |= std::uint64_t{1} << i;
  return mask;
}

int CircuitVector::degree() const {
  int d = 0;
  for (int x : u)
    if (x > 0) d += x;
  return d;
}

int integer_rank(std::span<const Column> cols) {
  if (cols.empty()) return 0;
  const std::size_t rows = cols.front().size();
  const std::size_t ncols = cols.size();
  // work on the transpose-free n x m matrix
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(ncols));
  for (std::size_t j = 0; j < ncols; ++j) {
    if (cols[j].size() != rows) throw InvalidArgument("integer_rank: ragged columns");
    for (std::size_t i = 0; i < rows; ++i) a[i][j] = cols[j][i];
  }
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < ncols; ++j) {
        a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

namespace {

using i64 = std::int64_t;

i64 checked_combine(i64 a, i64 x, i64 b, i64 y) {
  i64 p = 0;
  i64 q = 0;
  i64 r = 0;
  if (__builtin_mul_overflow(a, x, &p) || __builtin_mul_overflow(b, y, &q) || __builtin_sub_overflow(p, q, &r)) {
    throw CapExceeded("circuit search: integer overflow in elimination");
  }
  return r;
}

/// One row of the incremental echelon form: `row` = Σ combo[t] * a_{members[t]}.
struct EchelonRow {
  std::vector<i64> row;
  std::vector<i64> combo;  // indexed by column index, length m
  std::size_t pivot = 0;
};

void normalize_gcd(std::vector<i64>& row, std::vector<i64>& combo) {
  i64 g = 0;
  for (i64 x : row) g = std::gcd(g, x);
  for (i64 x : combo) g = std::gcd(g, x);
  if (g > 1) {
    for (i64& x : row) x /= g;
    for (i64& x : combo) x /= g;
  }
}

struct CircuitSearch {
  std::span<const Column> cols;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<int> members;
  std::vector<EchelonRow> basis;
  std::vector<CircuitVector> out;

  // Reduces column e against the current basis.
  EchelonRow reduce(std::size_t e) const {
    EchelonRow r;
    r.row.assign(cols[e].begin(), cols[e].end());
    r.combo.assign(m, 0);
    r.combo[e] = 1;
    for (const EchelonRow& b : basis) {
      const i64 f = r.row[b.pivot];
      if (f == 0) continue;
      const i64 p = b.row[b.pivot];
      for (std::size_t i = 0; i < n; ++i) r.row[i] = checked_combine(p, r.row[i], f, b.row[i]);
      for (std::size_t i = 0; i < m; ++i) r.combo[i] = checked_combine(p, r.combo[i], f, b.combo[i]);
      normalize_gcd(r.row, r.combo);
    }
    return r;
  }

  void dfs(std::size_t next) {
    for (std::size_t e = next; e < m; ++e) {
      EchelonRow r = reduce(e);
      auto nz = std::find_if(r.row.begin(), r.row.end(), [](i64 x) { return x != 0; });
      if (nz == r.row.end()) {
        // members + e is dependent; it is a circuit iff the relation uses all of it
        bool full = std::all_of(members.begin(), members.end(),
                                [&](int t) { return r.combo[static_cast<std::size_t>(t)] != 0; });
        if (full) record(r.combo);
        continue;
      }
      r.pivot = static_cast<std::size_t>(nz - r.row.begin());
      basis.push_back(std::move(r));
      members.push_back(static_cast<int>(e));
      dfs(e + 1);
      members.pop_back();
      basis.pop_back();
    }
  }

  void record(const std::vector<i64>& combo) {
    i64 g = 0;
    for (i64 x : combo) g = std::gcd(g, x);
    CircuitVector c;
    c.u.resize(m);
    i64 sign = 0;
    for (std::size_t i = 0; i < m; ++i) {
      i64 x = combo[i] / g;
      if (sign == 0 && x != 0) sign = x > 0 ? 1 : -1;
      if (std::llabs(x) > 2) throw ConsistencyError("circuit entry exceeds 2 in absolute value");
      c.u[i] = static_cast<int>(x);
    }
    for (int& x : c.u) x *= static_cast<int>(sign);
    out.push_back(std::move(c));
  }
};

}  // namespace

std::vector<CircuitVector> circuits_bruteforce(std::span<const Column> cols, int cap) {
  if (cap > 64) cap = 64;
  if (static_cast<int>(cols.size()) > cap) {
    throw CapExceeded("circuit enumeration: " + std::to_string(cols.size()) + " columns exceed the cap of " +
                      std::to_string(cap));
  }
  CircuitSearch search;
  search.cols = cols;
  search.m = cols.size();
  search.n = cols.empty() ? 0 : cols.front().size();
  search.dfs(0);
  std::sort(search.out.begin(), search.out.end(), [](const CircuitVector& a, const CircuitVector& b) {
    return a.support_mask() < b.support_mask();
  });
  return std::move(search.out);
}

bool nonnegative_solution_exists(const std::vector<std::vector<mpq_class>>& a, const std::vector<mpq_class>& b) {
  const std::size_t rows = a.size();
  const std::size_t vars = rows ? a.front().size() : 0;
  if (b.size() != rows) throw InvalidArgument("feasibility: row count mismatch");
  if (rows == 0) return true;

  // Tableau [A | I | b] with artificial basis; rows flipped so b >= 0.
  const std::size_t width = vars + rows + 1;
  std::vector<std::vector<mpq_class>> t(rows, std::vector<mpq_class>(width));
  std::vector<std::size_t> basic(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != vars) throw InvalidArgument("feasibility: ragged matrix");
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < vars; ++j) t[i][j] = flip ? mpq_class(-a[i][j]) : a[i][j];
    t[i][vars + i] = 1;
    t[i][width - 1] = flip ? mpq_class(-b[i]) : b[i];
    basic[i] = vars + i;
  }
  // Phase-1 objective: minimize the sum of artificials. Reduced costs for the
  // original columns are -(column sums).
  std::vector<mpq_class> cost(width);
  for (std::size_t j = 0; j < vars; ++j)
    for (std::size_t i = 0; i < rows; ++i) cost[j] -= t[i][j];
  for (std::size_t i = 0; i < rows; ++i) cost[width - 1] -= t[i][width - 1];

  for (;;) {
    // Bland: smallest index with negative reduced cost enters.
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = rows;
    mpq_class best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] > 0) {
        mpq_class ratio = t[i][width - 1] / t[i][enter];
        if (leave == rows || ratio < best || (ratio == best && basic[i] < basic[leave])) {
          best = ratio;
          leave = i;
        }
      }
    }
    if (leave == rows) break;  // unbounded direction cannot occur in phase 1
    const mpq_class piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const mpq_class f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    if (cost[enter] != 0) {
      const mpq_class f = cost[enter];
      for (std::size_t j = 0; j < width; ++j) cost[j] -= f * t[leave][j];
    }
    basic[leave] = enter;
  }
  // cost[width-1] holds minus the optimal artificial sum
  return cost[width - 1] == 0;
}

bool relint_intersection_feasible(const std::vector<std::vector<int>>& supports, std::span<const Column> cols,
                                  int variable_cap) {
  for (const auto& e : supports)
    if (e.empty()) throw InvalidArgument("relint_intersection_feasible: empty support");
  if (supports.size() <= 1) return true;
  std::size_t vars = 0;
  for (const auto& e : supports) vars += e.size();
  if (static_cast<int>(vars) > variable_cap) {
    throw CapExceeded("relint feasibility: " + std::to_string(vars) + " variables exceed the cap of " +
                      std::to_string(variable_cap));
  }
  const std::size_t n = cols.empty() ? 0 : cols.front().size();
  // λ = 1 + μ with μ >= 0. For k >= 1:
  //   Σ_{E_0} μ a_i - Σ_{E_k} μ a_i = Σ_{E_k} a_i - Σ_{E_0} a_i
  std::vector<std::size_t> offset(supports.size());
  std::size_t at = 0;
  for (std::size_t k = 0; k < supports.size(); ++k) {
    offset[k] = at;
    at += supports[k].size();
  }
  std::vector<std::vector<mpq_class>> a;
  std::vector<mpq_class> b;
  for (std::size_t k = 1; k < supports.size(); ++k) {
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<mpq_class> row(vars);
      mpq_class rhs = 0;
      for (std::size_t t = 0; t < supports[0].size(); ++t) {
        const int c = cols[static_cast<std::size_t>(supports[0][t])][v];
        row[offset[0] + t] = c;
        rhs -= c;
      }
      for (std::size_t t = 0; t < supports[k].size(); ++t) {
        const int c = cols[static_cast<std::size_t>(supports[k][t])][v];
        row[offset[k] + t] = -c;
        rhs += c;
      }
      a.push_back(std::move(row));
      b.push_back(rhs);
    }
  }
  return nonnegative_solution_exists(a, b);
}

bool vector_in_cone(const std::vector<mpq_class>& b, std::span<const Column> cols) {
  if (cols.empty()) return std::all_of(b.begin(), b.end(), [](const mpq_class& x) { return x == 0; });
  const std::size_t n = b.size();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != n) throw InvalidArgument("vector_in_cone: dimension mismatch");
    for (std::size_t i = 0; i < n; ++i) a[i][j] = cols[j][i];
  }
  return nonnegative_solution_exists(a, b);
}

}  // namespace toric
