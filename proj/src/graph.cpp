#include "toricrank/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <queue>
#include <sstream>

namespace toric {

namespace {

bool connected(int n, const std::vector<std::vector<int>>& adj) {
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n + 1), 0);
  std::vector<int> stack{1};
  seen[1] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<int> to_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw GraphError(GraphError::Kind::BadVertex, "graph needs at least one vertex");
  const auto side = static_cast<std::size_t>(n_ + 1);
  adj_.assign(side, {});
  edge_index_.assign(side * side, -1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    Edge& e = edges_[i];
    if (e.u == e.v) {
      throw GraphError(GraphError::Kind::Loop,
                       "loop at vertex " + std::to_string(e.u) + " (edge " + std::to_string(i + 1) + ")");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 1 || e.v > n_) {
      throw GraphError(GraphError::Kind::BadVertex,
                       "edge " + std::to_string(i + 1) + " uses a vertex outside 1.." + std::to_string(n_));
    }
    int& slot = edge_index_[static_cast<std::size_t>(e.u) * side + static_cast<std::size_t>(e.v)];
    if (slot != -1) {
      throw GraphError(GraphError::Kind::DuplicateEdge, "duplicate edge {" + std::to_string(e.u) + "," +
                                                            std::to_string(e.v) + "} (edge " +
                                                            std::to_string(i + 1) + ")");
    }
    slot = static_cast<int>(i);
    edge_index_[static_cast<std::size_t>(e.v) * side + static_cast<std::size_t>(e.u)] = static_cast<int>(i);
    adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  if (!connected(n_, adj_)) throw GraphError(GraphError::Kind::Disconnected, "graph is not connected");
}

std::optional<int> Graph::edge_between(int u, int v) const {
  if (u < 1 || v < 1 || u > n_ || v > n_) return std::nullopt;
  const auto side = static_cast<std::size_t>(n_ + 1);
  int idx = edge_index_[static_cast<std::size_t>(u) * side + static_cast<std::size_t>(v)];
  if (idx < 0) return std::nullopt;
  return idx;
}

std::vector<int> Graph::incidence_column(int i) const {
  std::vector<int> col(static_cast<std::size_t>(n_), 0);
  const Edge& e = edge(i);
  col[static_cast<std::size_t>(e.u - 1)] = 1;
  col[static_cast<std::size_t>(e.v - 1)] = 1;
  return col;
}

std::vector<std::vector<int>> Graph::incidence_columns() const {
  std::vector<std::vector<int>> cols;
  cols.reserve(edges_.size());
  for (int i = 0; i < edge_count(); ++i) cols.push_back(incidence_column(i));
  return cols;
}

std::string Graph::variable_name(int i) const {
  const Edge& e = edge(i);
  if (n_ <= 9) return "x" + std::to_string(e.u) + std::to_string(e.v);
  return "x{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

Graph parse_graph(std::string_view text) {
  std::optional<int> header_n;
  std::optional<int> header_m;
  std::vector<Edge> edges;
  int max_label = 0;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (tokens.front() == "p") {
      if (header_n || !edges.empty() || tokens.size() != 3) {
        throw GraphError(GraphError::Kind::Malformed, "header must be the first line 'p <n> <m>'", line_no);
      }
      header_n = to_int(tokens[1]);
      header_m = to_int(tokens[2]);
      if (!header_n || !header_m || *header_n < 1 || *header_m < 0) {
        throw GraphError(GraphError::Kind::Malformed, "bad header values", line_no);
      }
    } else {
      if (tokens.size() != 2) {
        throw GraphError(GraphError::Kind::Malformed, "expected '<u> <v>'", line_no);
      }
      auto u = to_int(tokens[0]);
      auto v = to_int(tokens[1]);
      if (!u || !v || *u < 1 || *v < 1) {
        throw GraphError(GraphError::Kind::Malformed, "vertex labels must be positive integers", line_no);
      }
      if (*u == *v) {
        throw GraphError(GraphError::Kind::Loop, "loop at vertex " + std::to_string(*u), line_no);
      }
      if (header_n && std::max(*u, *v) > *header_n) {
        throw GraphError(GraphError::Kind::BadVertex, "vertex label exceeds header n", line_no);
      }
      Edge e{std::min(*u, *v), std::max(*u, *v)};
      if (std::find(edges.begin(), edges.end(), e) != edges.end()) {
        throw GraphError(GraphError::Kind::DuplicateEdge,
                         "duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}", line_no);
      }
      edges.push_back(e);
      max_label = std::max(max_label, e.v);
    }
    if (end == text.size()) break;
  }
  if (header_m && static_cast<int>(edges.size()) != *header_m) {
    throw GraphError(GraphError::Kind::Malformed, "header announces " + std::to_string(*header_m) +
                                                      " edges, found " + std::to_string(edges.size()));
  }
  int n = header_n.value_or(std::max(max_label, 1));
  return Graph(n, std::move(edges));
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n + 1), -1);
  std::queue<int> queue;
  color[1] = 0;
  queue.push(1);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int w : g.neighbors(v)) {
      auto& cw = color[static_cast<std::size_t>(w)];
      if (cw == -1) {
        cw = 1 - color[static_cast<std::size_t>(v)];
        queue.push(w);
      } else if (cw == color[static_cast<std::size_t>(v)]) {
        return std::nullopt;
      }
    }
  }
  Bipartition parts;
  for (int v = 1; v <= n; ++v) (color[static_cast<std::size_t>(v)] == 0 ? parts.left : parts.right).push_back(v);
  return parts;
}

namespace {

struct CycleSearch {
  const Graph& g;
  int max_length;
  int start = 0;
  std::vector<int> path;
  std::vector<char> on_path;
  std::vector<EdgeCycle> out;

  void extend() {
    const int v = path.back();
    const int len = static_cast<int>(path.size());
    for (int w : g.neighbors(v)) {
      if (w == start) {
        // canonical orientation: second vertex smaller than the last one
        if (len >= 4 && len % 2 == 0 && path[1] < path.back()) record();
        continue;
      }
      if (w < start || on_path[static_cast<std::size_t>(w)] || len >= max_length) continue;
      path.push_back(w);
      on_path[static_cast<std::size_t>(w)] = 1;
      extend();
      on_path[static_cast<std::size_t>(w)] = 0;
      path.pop_back();
    }
  }

  void record() {
    EdgeCycle c;
    c.vertices = path;
    for (std::size_t k = 0; k < path.size(); ++k) {
      c.edges.push_back(*g.edge_between(path[k], path[(k + 1) % path.size()]));
    }
    out.push_back(std::move(c));
  }
};

}  // namespace

std::vector<EdgeCycle> enumerate_even_cycles(const Graph& g, std::optional<int> max_length) {
  if (!max_length && g.vertex_count() > 12) {
    throw InvalidArgument("enumerate_even_cycles: max_length is required above 12 vertices");
  }
  if (max_length && *max_length % 2 != 0) throw InvalidArgument("enumerate_even_cycles: max_length must be even");
  const int bound = max_length.value_or(g.vertex_count());
  CycleSearch search{g, std::min(bound, g.vertex_count()), 0, {}, {}, {}};
  search.on_path.assign(static_cast<std::size_t>(g.vertex_count() + 1), 0);
  for (int s = 1; s <= g.vertex_count(); ++s) {
    search.start = s;
    search.path = {s};
    search.on_path[static_cast<std::size_t>(s)] = 1;
    search.extend();
    search.on_path[static_cast<std::size_t>(s)] = 0;
  }
  std::sort(search.out.begin(), search.out.end(), [](const EdgeCycle& a, const EdgeCycle& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.edges < b.edges;
  });
  return std::move(search.out);
}

namespace {

void require_cycle_of(const Graph& g, const EdgeCycle& c) {
  const std::size_t q = c.vertices.size();
  if (q < 3 || c.edges.size() != q) {
    throw GraphError(GraphError::Kind::NotACycle, "cycle must have at least 3 vertices and matching edges");
  }
  std::vector<int> sorted = c.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw GraphError(GraphError::Kind::NotACycle, "cycle repeats a vertex");
  }
  for (std::size_t k = 0; k < q; ++k) {
    auto e = g.edge_between(c.vertices[k], c.vertices[(k + 1) % q]);
    if (!e || *e != c.edges[k]) throw GraphError(GraphError::Kind::NotACycle, "cycle is not a cycle of the graph");
  }
}

}  // namespace

bool cycle_has_chord(const Graph& g, const EdgeCycle& c) {
  require_cycle_of(g, c);
  const std::size_t q = c.vertices.size();
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = a + 2; b < q; ++b) {
      if (a == 0 && b == q - 1) continue;  // consecutive through the wrap
      if (g.adjacent(c.vertices[a], c.vertices[b])) return true;
    }
  }
  return false;
}

std::vector<std::vector<int>> enumerate_k4_subgraphs(const Graph& g) {
  std::vector<std::vector<int>> out;
  const int n = g.vertex_count();
  for (int a = 1; a <= n; ++a) {
    for (int b : g.neighbors(a)) {
      if (b <= a) continue;
      for (int c : g.neighbors(b)) {
        if (c <= b || !g.adjacent(a, c)) continue;
        for (int d : g.neighbors(c)) {
          if (d <= c || !g.adjacent(a, d) || !g.adjacent(b, d)) continue;
          out.push_back({a, b, c, d});
        }
      }
    }
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  if (vs.empty()) throw InvalidArgument("induced_subgraph: empty vertex set");
  std::vector<int> relabel(static_cast<std::size_t>(g.vertex_count() + 1), 0);
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (vs[k] < 1 || vs[k] > g.vertex_count()) throw InvalidArgument("induced_subgraph: vertex out of range");
    relabel[static_cast<std::size_t>(vs[k])] = static_cast<int>(k + 1);
  }
  std::vector<Edge> edges;
  std::vector<int> edge_map;
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    int u = relabel[static_cast<std::size_t>(e.u)];
    int v = relabel[static_cast<std::size_t>(e.v)];
    if (u && v) {
      edges.push_back({u, v});
      edge_map.push_back(i);
    }
  }
  return InducedSubgraph{Graph(static_cast<int>(vs.size()), std::move(edges)), vs, std::move(edge_map)};
}

Graph complete_graph(int n) {
  if (n < 1) throw InvalidArgument("complete_graph: n must be positive");
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph complete_bipartite_graph(int a, int b) {
  if (a < 1 || b < 1) throw InvalidArgument("complete_bipartite_graph: both parts must be nonempty");
  std::vector<Edge> edges;
  for (int u = 1; u <= a; ++u)
    for (int v = a + 1; v <= a + b; ++v) edges.push_back({u, v});
  return Graph(a + b, std::move(edges));
}

Graph cycle_graph(int length) {
  if (length < 3) throw InvalidArgument("cycle_graph: length must be at least 3");
  std::vector<Edge> edges;
  for (int v = 1; v < length; ++v) edges.push_back({v, v + 1});
  edges.push_back({1, length});
  return Graph(length, std::move(edges));
}

}  // namespace toric
