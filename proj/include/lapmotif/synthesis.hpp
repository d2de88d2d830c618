#pragma once

#include "lapmotif/errors.hpp"
#include "lapmotif/graph.hpp"
#include "lapmotif/rational.hpp"

#include <optional>
#include <vector>

namespace lapmotif {

// Graph with a distinguished vertex p0 carrying an integer function f whose
// excess vanishes everywhere except possibly at p0. The block realizes the
// pair (n, m) = (f(p0), e(p0)); n*m is always even (see ParityObstruction).
struct Block {
  Graph graph;
  int p0 = 0;
  VertexFunction f;
  Int n;  // f(p0)
  Int m;  // excess at p0
};

enum class BlockKind { triangle, pentagon };

// count triangles joined at p0 realize (1, -2*count); count pentagons with
// values (-1,-1,1,1,1) joined at the middle +1 vertex realize (1, 2*count).
Block basic_block(BlockKind kind, int count);

// Pending vertex with value -m attached to the old p0 becomes the new p0:
// (n, m) -> (-m, n).
Block rotate_block(const Block& b);

// Sign flip of f: (n, m) -> (-n, -m).
Block negate_block(const Block& b);

// Identifies all p0's (blocks are disjoint, so no neighbor conflicts); the
// first coordinates must agree. (n, m_1), ..., (n, m_k) -> (n, sum m_j).
Block join_blocks(const std::vector<Block>& blocks);

// Deterministic closed-form construction of a block with pair (n, m).
// Throws ParityObstruction when n and m are both odd.
Block realize_pair(long long n, long long m);

// Exact check of every Block invariant.
bool verify_block(const Block& b);

// Extension of sigma to a graph carrying an exactly balanced function that
// restricts to f on sigma. Original ids and sigma's edges are preserved.
// When some f(p) * e(p) is odd, a parity gadget vertex with value 1 is wired
// to all such p first (their count is always even); afterwards every vertex
// with nonzero value or residual excess receives a block attachment
// realizing (f(p), -e(p)).
struct EmbedResult {
  Graph graph;
  VertexFunction function;
  std::optional<int> gadget_id;
  std::vector<std::pair<int, int>> attachments;  // (vertex, block vertex count)
};

EmbedResult embed_with_eigenfunction(const Graph& sigma, const VertexFunction& f);

}  // namespace lapmotif
