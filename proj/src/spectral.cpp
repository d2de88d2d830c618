#include "lapmotif/spectral.hpp"

#include "lapmotif/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lapmotif {

namespace {

constexpr int kMaxSweeps = 50;
constexpr double kConvergenceFactor = 1e-12;  // off-diagonal target relative to ||M||
constexpr double kClampSlack = 1e-9;

void require_no_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) {
      throw PreconditionError("vertex " + std::to_string(v) +
                              " is isolated; the normalized Laplacian needs positive degrees");
    }
  }
}

double frobenius_norm(const std::vector<std::vector<double>>& m) {
  double s = 0.0;
  for (const auto& row : m) {
    for (double x : row) s += x * x;
  }
  return std::sqrt(s);
}

double off_diagonal_norm(const std::vector<std::vector<double>>& m) {
  const int n = static_cast<int>(m.size());
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) s += 2.0 * m[i][j] * m[i][j];
  }
  return std::sqrt(s);
}

// Cyclic Jacobi with the standard stable rotation; eigenvectors accumulate
// in the columns of v.
void jacobi_eigen(std::vector<std::vector<double>>& a, std::vector<std::vector<double>>& v) {
  const int n = static_cast<int>(a.size());
  v.assign(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) v[i][i] = 1.0;
  if (n < 2) return;

  const double target = kConvergenceFactor * frobenius_norm(a);
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= target) return;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p][q];
        if (apq == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 1.0 / (2.0 * theta);
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a[p][p] -= t * apq;
        a[q][q] += t * apq;
        a[p][q] = 0.0;
        a[q][p] = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r != p && r != q) {
            const double arp = a[r][p];
            const double arq = a[r][q];
            a[r][p] = arp - s * (arq + tau * arp);
            a[p][r] = a[r][p];
            a[r][q] = arq + s * (arp - tau * arq);
            a[q][r] = a[r][q];
          }
          const double vrp = v[r][p];
          const double vrq = v[r][q];
          v[r][p] = vrp - s * (vrq + tau * vrp);
          v[r][q] = vrq + s * (vrp - tau * vrq);
        }
      }
    }
  }
  if (off_diagonal_norm(a) > target) {
    throw std::runtime_error("Jacobi eigensolver did not converge within " +
                             std::to_string(kMaxSweeps) + " sweeps");
  }
}

}  // namespace

std::vector<double> Spectrum::eigenfunction(int k) const {
  if (k < 0 || k >= vertex_count()) {
    throw PreconditionError("eigenpair index " + std::to_string(k) + " out of range");
  }
  std::vector<double> u(vectors[k].size());
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = vectors[k][i] / std::sqrt(degrees[i]);
  return u;
}

std::vector<double> laplacian_apply(const Graph& g, const std::vector<double>& v) {
  require_no_isolated_vertex(g);
  if (static_cast<int>(v.size()) != g.vertex_count()) {
    throw PreconditionError("vector size does not match vertex count");
  }
  std::vector<double> out(v.size());
  for (int i = 0; i < g.vertex_count(); ++i) {
    double s = 0.0;
    for (int j : g.neighbors(i)) s += v[j];
    out[i] = v[i] - s / g.degree(i);
  }
  return out;
}

std::vector<std::vector<double>> symmetrized_matrix(const Graph& g) {
  require_no_isolated_vertex(g);
  const int n = g.vertex_count();
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    m[i][i] = 1.0;
    for (int j : g.neighbors(i)) {
      m[i][j] = -1.0 / std::sqrt(static_cast<double>(g.degree(i)) * g.degree(j));
    }
  }
  return m;
}

Spectrum full_spectrum(const Graph& g, double grouping_tol) {
  if (grouping_tol <= 0.0) throw PreconditionError("grouping tolerance must be positive");
  Spectrum spec;
  spec.grouping_tol = grouping_tol;
  const int n = g.vertex_count();
  if (n == 0) return spec;
  if (!is_connected(g)) {
    spec.warnings.push_back(
        "graph is disconnected: eigenvalue 0 need not be simple and per-component spectra mix");
  }

  auto a = symmetrized_matrix(g);
  std::vector<std::vector<double>> v;
  jacobi_eigen(a, v);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return a[x][x] < a[y][y]; });

  spec.degrees.resize(n);
  for (int i = 0; i < n; ++i) spec.degrees[i] = g.degree(i);
  spec.all_values.resize(n);
  spec.vectors.assign(n, std::vector<double>(n, 0.0));
  for (int k = 0; k < n; ++k) {
    double value = a[order[k]][order[k]];
    if (value < 0.0 && value >= -kClampSlack) value = 0.0;
    if (value > 2.0 && value <= 2.0 + kClampSlack) value = 2.0;
    spec.all_values[k] = value;
    for (int r = 0; r < n; ++r) spec.vectors[k][r] = v[r][order[k]];
  }

  int start = 0;
  for (int k = 1; k <= n; ++k) {
    if (k == n || spec.all_values[k] - spec.all_values[k - 1] >= grouping_tol) {
      double mean = 0.0;
      for (int i = start; i < k; ++i) mean += spec.all_values[i];
      mean /= (k - start);
      spec.values.push_back(mean);
      spec.multiplicities.push_back(k - start);
      start = k;
    }
  }
  return spec;
}

double weighted_inner_product(const Graph& g, const std::vector<double>& u,
                              const std::vector<double>& v) {
  if (u.size() != v.size() || static_cast<int>(u.size()) != g.vertex_count()) {
    throw PreconditionError("vector sizes do not match vertex count");
  }
  double s = 0.0;
  for (int i = 0; i < g.vertex_count(); ++i) s += g.degree(i) * u[i] * v[i];
  return s;
}

double residual(const Graph& g, const std::vector<double>& u, double lambda) {
  double umax = 0.0;
  for (double x : u) umax = std::max(umax, std::abs(x));
  if (umax == 0.0) throw PreconditionError("residual of the zero vector is undefined");
  auto du = laplacian_apply(g, u);
  double rmax = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    rmax = std::max(rmax, std::abs(du[i] - lambda * u[i]));
  }
  return rmax / umax;
}

int multiplicity_of(const Spectrum& spec, double lambda, double tol) {
  int total = 0;
  for (std::size_t i = 0; i < spec.values.size(); ++i) {
    if (std::abs(spec.values[i] - lambda) <= tol) total += spec.multiplicities[i];
  }
  return total;
}

BipartiteSpectralReport spectral_bipartite_test(const Spectrum& spec, double tol) {
  BipartiteSpectralReport report;
  const int n = spec.vertex_count();
  if (n == 0) return report;
  report.top_eigenvalue_two = spec.all_values.back() >= 2.0 - tol;
  report.symmetric_about_one = true;
  for (int i = 0; i < n; ++i) {
    if (std::abs(spec.all_values[i] + spec.all_values[n - 1 - i] - 2.0) > tol) {
      report.symmetric_about_one = false;
      break;
    }
  }
  return report;
}

}  // namespace lapmotif
