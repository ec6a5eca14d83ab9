#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toricrank/error.hpp"

namespace toric {

/// Undirected edge between 1-based vertices, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite simple connected graph. Edge indices are 0-based internally and
/// their order fixes the variable order x_1..x_m of the polynomial ring.
class Graph {
 public:
  /// Validates and builds a graph. Throws GraphError on loops, duplicate
  /// edges, labels outside 1..n, or a disconnected vertex set.
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int i) const { return edges_.at(static_cast<std::size_t>(i)); }

  /// Index of the edge joining u and v, if present.
  std::optional<int> edge_between(int u, int v) const;
  bool adjacent(int u, int v) const { return edge_between(u, v).has_value(); }

  /// Neighbors of v in increasing order.
  const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }

  /// Column a_i of the incidence matrix as a 0/1 vector of length n.
  std::vector<int> incidence_column(int i) const;
  std::vector<std::vector<int>> incidence_columns() const;

  /// Variable name of edge i: "x<u><v>" when n <= 9, "x{u,v}" otherwise.
  std::string variable_name(int i) const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;       // 1-based, index 0 unused
  std::vector<int> edge_index_;             // (n+1)^2 table, -1 when absent
};

/// Parses the edge-list text format: '#' comments, optional "p <n> <m>"
/// header, then one "<u> <v>" per line. Edge order follows the file.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

/// Cyclic sequence of edges. `vertices[k]` and `vertices[k+1]` are the
/// endpoints of `edges[k]`; the last edge closes back to `vertices[0]`.
struct EdgeCycle {
  std::vector<int> vertices;
  std::vector<int> edges;

  std::size_t length() const noexcept { return edges.size(); }
  friend bool operator==(const EdgeCycle&, const EdgeCycle&) = default;
};

struct Bipartition {
  std::vector<int> left;   // contains vertex 1
  std::vector<int> right;
};

/// BFS 2-coloring from vertex 1; absent when an odd cycle exists.
std::optional<Bipartition> is_bipartite(const Graph& g);

/// All even cycles up to rotation and reflection, sorted by length and then by
/// the edge sequence. Above 12 vertices a max_length is required.
std::vector<EdgeCycle> enumerate_even_cycles(const Graph& g,
                                             std::optional<int> max_length = std::nullopt);

/// True iff some edge joins two non-consecutive vertices of the cycle.
bool cycle_has_chord(const Graph& g, const EdgeCycle& c);

/// Vertex 4-sets inducing K_4, in lexicographic order.
std::vector<std::vector<int>> enumerate_k4_subgraphs(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> vertex_map;  // new vertex k (1-based) -> vertex_map[k-1]
  std::vector<int> edge_map;    // new edge index -> original edge index
};

/// Subgraph on `vs` (relabelled 1..|vs| in increasing order) with every edge
/// of g inside vs. Throws GraphError when the result is disconnected.
InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> vs);

/// Builtin families.
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph cycle_graph(int length);

}  // namespace toric
