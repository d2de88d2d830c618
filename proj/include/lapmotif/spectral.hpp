#pragma once

#include "lapmotif/graph.hpp"

#include <string>
#include <vector>

namespace lapmotif {

inline constexpr double kDefaultGroupingTol = 1e-8;

// Full eigendecomposition of the symmetrized normalized Laplacian.
// all_values / vectors hold the N eigenpairs in ascending order, with
// vectors[k] an orthonormal eigenvector of the symmetrized matrix. values /
// multiplicities describe the grouped spectrum (strictly ascending).
struct Spectrum {
  std::vector<double> all_values;
  std::vector<std::vector<double>> vectors;
  std::vector<double> values;
  std::vector<int> multiplicities;
  double grouping_tol = kDefaultGroupingTol;
  std::vector<int> degrees;
  std::vector<std::string> warnings;

  int vertex_count() const { return static_cast<int>(all_values.size()); }

  // k-th eigenpair back-transformed to the Laplacian: u(i) = w(i)/sqrt(n_i).
  std::vector<double> eigenfunction(int k) const;
};

// (Delta v)(i) = v(i) - (1/n_i) * sum_{j~i} v(j). Rejects isolated vertices.
std::vector<double> laplacian_apply(const Graph& g, const std::vector<double>& v);

// M with M_ii = 1 and M_ij = -1/sqrt(n_i n_j) for i ~ j. Similar to the
// Laplacian via the diagonal square-root-degree map, so spectra coincide.
std::vector<std::vector<double>> symmetrized_matrix(const Graph& g);

// All N eigenpairs by cyclic Jacobi rotations, iterated until the
// off-diagonal Frobenius norm drops below 1e-12 * ||M||. Eigenvalues within
// 1e-9 outside [0, 2] are clamped; neighbors closer than grouping_tol are
// grouped into one multiplicity. Disconnected input produces a warning.
Spectrum full_spectrum(const Graph& g, double grouping_tol = kDefaultGroupingTol);

// Degree-weighted product sum_i n_i u(i) v(i), under which the Laplacian
// is symmetric.
double weighted_inner_product(const Graph& g, const std::vector<double>& u,
                              const std::vector<double>& v);

// ||Delta u - lambda u||_inf / ||u||_inf.
double residual(const Graph& g, const std::vector<double>& u, double lambda);

// Total multiplicity of grouped eigenvalues within tol of lambda.
int multiplicity_of(const Spectrum& spec, double lambda, double tol);

struct BipartiteSpectralReport {
  bool top_eigenvalue_two = false;   // lambda_max >= 2 - tol
  bool symmetric_about_one = false;  // eigenvalue multiset symmetric about 1

  explicit operator bool() const { return top_eigenvalue_two; }
};

BipartiteSpectralReport spectral_bipartite_test(const Spectrum& spec, double tol);

}  // namespace lapmotif
