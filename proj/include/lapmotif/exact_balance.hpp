#pragma once

#include "lapmotif/graph.hpp"
#include "lapmotif/rational.hpp"

#include <vector>

namespace lapmotif {

// Exact basis of ker A for the 0-1 adjacency matrix A. Basis vectors are
// integer-valued with gcd 1 and positive leading entry, one per free column
// of the reduced row echelon form of A, ordered by ascending free column.
// This normalization makes the basis reproducible across implementations.
struct KernelBasis {
  std::vector<VertexFunction> basis;

  int multiplicity() const { return static_cast<int>(basis.size()); }
};

KernelBasis adjacency_kernel(const Graph& g);

// dim ker A; the multiplicity of eigenvalue 1 of the normalized Laplacian.
int eigenvalue_one_multiplicity(const Graph& g);

// True iff the neighbor sum of f vanishes at every vertex (empty sums are 0).
bool is_balanced(const Graph& g, const VertexFunction& f);

// Neighbor sum of f at p: e(p) = sum over q ~ p of f(q).
Rational excess(const Graph& g, const VertexFunction& f, int p);

// Exact check of (1/n_i) * sum_{j~i} f(j) = (1 - lambda) * f(i) at every
// vertex. Degree-0 vertices use the convention f(i) * (1 - lambda) = 0.
// Throws PreconditionError when f is identically zero.
bool verify_eigenpair_exact(const Graph& g, const VertexFunction& f, const Rational& lambda);

// Rank of an arbitrary integer matrix by fraction-free elimination.
int integer_matrix_rank(std::vector<std::vector<Int>> m);

}  // namespace lapmotif
