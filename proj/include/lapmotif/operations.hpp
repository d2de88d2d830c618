#pragma once

#include "lapmotif/exact_balance.hpp"
#include "lapmotif/graph.hpp"
#include "lapmotif/rational.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace lapmotif {

// Vertex subset of a host graph, interpreted with all induced edges.
// Vertices are sorted ascending; the induced subgraph must be connected.
struct Motif {
  std::vector<int> vertices;

  int size() const { return static_cast<int>(vertices.size()); }
};

// Validates ids against the host and checks induced connectivity.
Motif make_motif(const Graph& host, std::vector<int> vertices);

// --- Motif doubling -------------------------------------------------------

// Copy q_a of every motif vertex p_a, appended in motif order
// (copy_ids[a] = id of the copy of motif.vertices[a]). Copies inherit the
// motif-internal edges and every outside neighbor of their original, and are
// never adjacent to the original motif.
struct DoubleMotifResult {
  Graph graph;
  std::vector<int> copy_ids;
};

DoubleMotifResult double_motif(const Graph& g, const Motif& motif);

// The localized eigenvalue-1 eigenfunction of the doubled graph:
// f_sigma(p_a) at p_a, -f_sigma(p_a) at q_a, 0 elsewhere. f_sigma is indexed
// by motif position and must be nonzero and balanced on the standalone motif
// (a single-vertex motif satisfies this vacuously). The result is re-verified
// exactly before returning.
VertexFunction localized_eigenfunction_for_doubling(const Graph& g, const Motif& motif,
                                                    const VertexFunction& f_sigma);

struct VertexDoubleResult {
  Graph graph;
  int copy_id = -1;
  VertexFunction function;  // +1 at v, -1 at the copy, balanced
};

VertexDoubleResult double_vertex(const Graph& g, int v);

// General-eigenvalue motif doubling. f (indexed by motif position) and
// lambda must satisfy, with n_i the degree in the host,
//   sum_{j in motif, j ~ i} f(j) = (1 - lambda) * n_i * f(i)  for all motif i.
struct GeneralDoubleResult {
  Graph graph;
  std::vector<int> copy_ids;
  VertexFunction function;
  Rational lambda;
};

GeneralDoubleResult double_motif_general(const Graph& g, const Motif& motif,
                                         const VertexFunction& f, const Rational& lambda);

// Edge doubling: both eigenvalues 1 -/+ 1/sqrt(n1 n2) with their localized
// eigenfunctions. When n1*n2 is a perfect square the eigenpairs are exact
// rationals and verified exactly; otherwise they are floats verified to
// residual < 1e-9.
struct EdgeDoubleResult {
  struct Branch {
    double lambda = 0.0;
    std::vector<double> function;
    std::optional<Rational> lambda_exact;
    std::optional<VertexFunction> function_exact;
  };

  Graph graph;
  std::vector<int> copy_ids;  // copies of p1, p2 in that order
  long long degree_product = 0;
  bool exact = false;
  Branch minus;  // lambda = 1 - 1/sqrt(n1 n2)
  Branch plus;   // lambda = 1 + 1/sqrt(n1 n2)
};

EdgeDoubleResult double_edge(const Graph& g, int p1, int p2);

// --- Whole-graph doubling -------------------------------------------------

// Two copies of g (second copy shifted by n) plus cross edges p_i ~ q_j and
// p_j ~ q_i for every original edge i ~ j. Every degree doubles.
Graph double_graph(const Graph& g);

// The n localized kernel elements of double_graph(g): +1 at i, -1 at n+i.
// Rejects graphs with isolated vertices (their doubles stay isolated and
// carry no eigenvalue-1 meaning).
std::vector<VertexFunction> doubled_graph_kernel_basis(const Graph& g);

// --- Splitting and joining -------------------------------------------------

// Partition of the host into sigma0/sigma1/sigma2 with no sigma1-sigma2
// edge; edge_side routes each sigma0-internal edge (keys normalized u < v)
// to copy 1 or copy 2.
struct SplitSpec {
  std::vector<int> sigma0;
  std::vector<int> sigma1;
  std::vector<int> sigma2;
  std::map<std::pair<int, int>, int> edge_side;
};

// Result ids: original ids keep their meaning (sigma0 originals act as copy
// 1), copy-2 vertices follow, then one bridge vertex per sigma0 vertex, both
// in ascending sigma0 order.
struct SplitResult {
  Graph graph;
  VertexFunction function;
  std::vector<int> sigma0;      // ascending
  std::vector<int> copy2_ids;   // copy2_ids[k] = copy of sigma0[k]
  std::vector<int> bridge_ids;  // bridge_ids[k] = bridge above sigma0[k]
};

SplitResult split_graph(const Graph& g, const SplitSpec& spec, const VertexFunction& f1);

// Chain of length 2 hung off p: new vertices p1 ~ p and p2 ~ p1 with values
// 0 and -f1(p). Keeps f1 balanced.
struct AttachChain2Result {
  Graph graph;
  int p1_id = -1;
  int p2_id = -1;
  VertexFunction function;
};

AttachChain2Result attach_chain2(const Graph& g, const VertexFunction& f1, int p);

// Disjoint union with p1 and p2 identified; the merged vertex keeps p1's id,
// map_g2[v] gives the new id of g2's vertex v.
struct JoinResult {
  Graph graph;
  std::vector<int> map_g2;
};

JoinResult join_graphs(const Graph& g1, int p1, const Graph& g2, int p2);

// Eigenfunction on join_graphs(g1, p1, g2, p2). For lambda != 1 both
// functions must be exact lambda-eigenfunctions (or identically zero)
// vanishing at the join. For lambda = 1 it suffices that both are balanced
// away from the join with opposite excesses there and f1(p1) = f2(p2).
VertexFunction join_eigenfunctions(const Graph& g1, const VertexFunction& f1, const Graph& g2,
                                   const VertexFunction& f2, const Rational& lambda, int p1,
                                   int p2);

// --- Identification / connection calculus ----------------------------------

struct PairOpResult {
  Graph graph;
  VertexFunction function;
  std::vector<int> vertex_map;  // old id -> new id
};

// Identifies p_j with q_j for every pair. fn must have zero excess off the
// paired vertices and satisfy fn(p_j) = fn(q_j), e(p_j) = -e(q_j) per pair.
// Pairs must be non-adjacent, share no common neighbor, and the
// identification must not create parallel edges.
PairOpResult merge_pairs_with_function(const Graph& g, const std::vector<std::pair<int, int>>& pairs,
                                       const VertexFunction& fn);

// Adds edge p_j - q_j for every pair. fn must have zero excess off the
// paired vertices and satisfy fn(p_j) = -e(q_j), fn(q_j) = -e(p_j) per pair.
PairOpResult connect_pairs_with_function(const Graph& g,
                                         const std::vector<std::pair<int, int>>& pairs,
                                         const VertexFunction& fn);

// --- Motif counting ---------------------------------------------------------

// Number of vertex subsets of g hosting a copy of pattern, i.e. admitting an
// edge-preserving bijection from pattern (non-induced by default; induced
// additionally requires non-edges to be preserved). Patterns are limited to
// 8 vertices.
long long count_subgraph_embeddings(const Graph& g, const Graph& pattern, bool induced = false);

}  // namespace lapmotif
