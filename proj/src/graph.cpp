#include "lapmotif/graph.hpp"

#include "lapmotif/errors.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace lapmotif {

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edge_list) {
  if (vertex_count < 0) {
    throw PreconditionError("vertex count must be nonnegative");
  }
  adj_.assign(vertex_count, {});
  for (const auto& [u, v] : edge_list) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count) {
      throw PreconditionError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                              ") has a vertex id out of range [0, " +
                              std::to_string(vertex_count) + ")");
    }
    if (u == v) {
      throw PreconditionError("self-loop at vertex " + std::to_string(u) + " is not allowed");
    }
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

int Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& list : adj_) twice += list.size();
  return static_cast<int>(twice / 2);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count()) {
    throw PreconditionError("vertex id " + std::to_string(v) + " out of range [0, " +
                            std::to_string(vertex_count()) + ")");
  }
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> result;
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) result.emplace_back(u, v);
    }
  }
  return result;
}

Graph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& edge_list) {
  return Graph(vertex_count, edge_list);
}

int degree(const Graph& g, int v) { return g.degree(v); }

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = true;
  int visited = 1;
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.pop();
    for (int v : g.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = true;
        ++visited;
        frontier.push(v);
      }
    }
  }
  return visited == n;
}

bool is_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::queue<int> frontier;
  for (int start = 0; start < n; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    frontier.push(start);
    while (!frontier.empty()) {
      int u = frontier.front();
      frontier.pop();
      for (int v : g.neighbors(u)) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          frontier.push(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool has_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) return true;
  }
  return false;
}

Graph make_chain(int m) {
  if (m < 1) throw PreconditionError("chain needs at least 1 vertex");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
  return Graph(m, edges);
}

Graph make_cycle(int m) {
  if (m < 3) throw PreconditionError("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) edges.emplace_back(i, (i + 1) % m);
  return Graph(m, edges);
}

Graph make_complete(int n) {
  if (n < 1) throw PreconditionError("complete graph needs at least 1 vertex");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

Graph make_petal(int k) {
  if (k < 1) throw PreconditionError("petal graph needs at least 1 triangle");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) {
    int a = 2 * i + 1, b = 2 * i + 2;
    edges.emplace_back(0, a);
    edges.emplace_back(0, b);
    edges.emplace_back(a, b);
  }
  return Graph(2 * k + 1, edges);
}

Graph add_pending_vertex(const Graph& g, int v) {
  return add_vertex_with_neighbors(g, {v});
}

Graph add_vertex_with_neighbors(const Graph& g, const std::vector<int>& neighbors) {
  const int n = g.vertex_count();
  auto edges = g.edges();
  for (int v : neighbors) {
    if (v < 0 || v >= n) {
      throw PreconditionError("vertex id " + std::to_string(v) + " out of range [0, " +
                              std::to_string(n) + ")");
    }
    edges.emplace_back(v, n);
  }
  return Graph(n + 1, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int offset = a.vertex_count();
  auto edges = a.edges();
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + offset, v + offset);
  return Graph(offset + b.vertex_count(), edges);
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> ids = vertices;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<int> position(g.vertex_count(), -1);
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (ids[k] < 0 || ids[k] >= g.vertex_count()) {
      throw PreconditionError("vertex id " + std::to_string(ids[k]) + " out of range");
    }
    position[ids[k]] = static_cast<int>(k);
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges()) {
    if (position[u] >= 0 && position[v] >= 0) edges.emplace_back(position[u], position[v]);
  }
  return Graph(static_cast<int>(ids.size()), edges);
}

}  // namespace lapmotif
