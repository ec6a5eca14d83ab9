#pragma once

#include <string>
#include <vector>

#include "toricrank/graph.hpp"
#include "toricrank/ideal.hpp"

namespace toric::fixture {

/// Monomial from a product such as "x14x26" on a graph with n <= 9.
inline Monomial monomial(const Graph& g, const std::string& text) {
  Monomial mon = Monomial::one(g.edge_count());
  for (std::size_t k = 0; k < text.size(); k += 3) {
    const int u = text[k + 1] - '0';
    const int v = text[k + 2] - '0';
    auto e = g.edge_between(u, v);
    if (!e) throw InvalidArgument("fixture: no edge " + text.substr(k, 3));
    ++mon.exponents[static_cast<std::size_t>(*e)];
  }
  return mon;
}

/// Polynomial from a signed sum such as "x14x26-x16x24+x15x36".
inline Polynomial polynomial(const Graph& g, const std::string& text) {
  Polynomial p;
  std::size_t k = 0;
  while (k < text.size()) {
    int sign = 1;
    if (text[k] == '+' || text[k] == '-') {
      sign = text[k] == '-' ? -1 : 1;
      ++k;
    }
    std::size_t end = text.find_first_of("+-", k);
    if (end == std::string::npos) end = text.size();
    p[monomial(g, text.substr(k, end - k))] += sign;
    k = end;
  }
  return p;
}

inline Binomial binomial(const Graph& g, const std::string& plus, const std::string& minus) {
  return Binomial::make(monomial(g, plus), monomial(g, minus));
}

inline const std::vector<std::pair<std::string, std::string>>& k33_generators() {
  static const std::vector<std::pair<std::string, std::string>> list{
      {"x14x26", "x16x24"}, {"x15x36", "x16x35"}, {"x25x36", "x26x35"},
      {"x24x36", "x26x34"}, {"x14x25", "x15x24"}, {"x15x26", "x16x25"},
      {"x24x35", "x25x34"}, {"x14x36", "x16x34"}, {"x14x35", "x15x34"}};
  return list;
}

inline const std::vector<std::string>& k33_radical_generators() {
  static const std::vector<std::string> list{
      "x14x26-x16x24+x15x36-x16x35", "x25x36-x26x35+x14x25-x15x24",
      "x24x36-x26x34", "x15x26-x16x25", "x24x35-x25x34", "x14x36-x16x34",
      "x14x35-x15x34"};
  return list;
}

}  // namespace toric::fixture
