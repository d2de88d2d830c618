#pragma once

#include <string>
#include <utility>
#include <vector>

namespace lapmotif {

// Finite simple undirected graph with dense vertex ids 0..vertex_count-1.
// Adjacency lists are kept sorted, symmetric, free of self-loops and
// duplicates. Instances are immutable after construction; operations that
// grow a graph return a new one and append fresh ids at the end.
class Graph {
 public:
  Graph() = default;

  // Canonicalizing constructor: sorts adjacency, collapses duplicate edges.
  // Throws PreconditionError on out-of-range ids or self-loops.
  Graph(int vertex_count, const std::vector<std::pair<int, int>>& edge_list);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const;
  int degree(int v) const;
  const std::vector<int>& neighbors(int v) const;
  bool has_edge(int u, int v) const;

  // All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  std::vector<std::vector<int>> adj_;
};

Graph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& edge_list);

int degree(const Graph& g, int v);
bool is_connected(const Graph& g);  // empty graph counts as connected
bool is_bipartite(const Graph& g);
bool has_isolated_vertex(const Graph& g);

// Path on m vertices (m >= 1), edges i - i+1.
Graph make_chain(int m);
// Cycle on m vertices (m >= 3), edges i - (i+1 mod m).
Graph make_cycle(int m);
// Complete graph on n vertices (n >= 1).
Graph make_complete(int n);
// k triangles sharing vertex 0: triangle i uses vertices 2i+1, 2i+2.
Graph make_petal(int k);

// New vertex (id = old vertex_count) adjacent only to v.
Graph add_pending_vertex(const Graph& g, int v);

// New vertex (id = old vertex_count) adjacent to every vertex in `neighbors`.
Graph add_vertex_with_neighbors(const Graph& g, const std::vector<int>& neighbors);

// Both graphs side by side; ids of b shift up by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

// Subgraph on `vertices` (sorted, deduplicated), renumbered 0..k-1 in that order.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

}  // namespace lapmotif
