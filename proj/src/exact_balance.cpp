#include "lapmotif/exact_balance.hpp"

#include "lapmotif/errors.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace lapmotif {

namespace {

struct EchelonForm {
  std::vector<std::vector<Int>> rows;
  std::vector<int> pivot_cols;  // pivot of rows[r] sits in pivot_cols[r]
};

// Fraction-free (Bareiss) forward elimination: stays in integers by
// deferring divisions to the previous pivot, which divides exactly.
EchelonForm fraction_free_echelon(std::vector<std::vector<Int>> m) {
  EchelonForm ef;
  if (m.empty()) return ef;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  Int prev_pivot = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot_row = -1;
    for (int i = r; i < rows; ++i) {
      if (m[i][c] != 0) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row < 0) continue;
    std::swap(m[r], m[pivot_row]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) / prev_pivot;
      }
      m[i][c] = 0;
    }
    prev_pivot = m[r][c];
    ef.pivot_cols.push_back(c);
    ++r;
  }
  m.resize(ef.pivot_cols.size());
  ef.rows = std::move(m);
  return ef;
}

void normalize_to_integers(std::vector<Rational>& x, VertexFunction& out) {
  Int scale = 1;
  for (const auto& q : x) scale = lcm(scale, denominator(q));
  std::vector<Int> ints(x.size());
  Int common = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    ints[i] = numerator(Rational(x[i] * scale));
    common = gcd(common, ints[i]);
  }
  if (common == 0) common = 1;
  for (const auto& v : ints) {
    if (v != 0) {
      if (v < 0) common = -common;
      break;
    }
  }
  out.resize(ints.size());
  for (std::size_t i = 0; i < ints.size(); ++i) out[i] = Rational(ints[i] / common);
}

void check_size(const Graph& g, const VertexFunction& f) {
  if (static_cast<int>(f.size()) != g.vertex_count()) {
    throw PreconditionError("function has " + std::to_string(f.size()) + " values but graph has " +
                            std::to_string(g.vertex_count()) + " vertices");
  }
}

}  // namespace

KernelBasis adjacency_kernel(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j : g.neighbors(i)) a[i][j] = 1;
  }
  EchelonForm ef = fraction_free_echelon(std::move(a));

  std::vector<bool> is_pivot(n, false);
  for (int c : ef.pivot_cols) is_pivot[c] = true;

  KernelBasis result;
  for (int free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> x(n, Rational(0));
    x[free_col] = 1;
    for (int r = static_cast<int>(ef.pivot_cols.size()) - 1; r >= 0; --r) {
      const int c = ef.pivot_cols[r];
      Rational s = 0;
      for (int j = c + 1; j < n; ++j) {
        if (x[j] != 0 && ef.rows[r][j] != 0) s += Rational(ef.rows[r][j]) * x[j];
      }
      x[c] = -s / Rational(ef.rows[r][c]);
    }
    VertexFunction u;
    normalize_to_integers(x, u);
    // Exact certificate: A u = 0. A failure here is a defect.
    for (int i = 0; i < n; ++i) {
      Rational s = 0;
      for (int j : g.neighbors(i)) s += u[j];
      if (s != 0) throw std::logic_error("adjacency_kernel produced a non-kernel vector");
    }
    result.basis.push_back(std::move(u));
  }
  return result;
}

int eigenvalue_one_multiplicity(const Graph& g) { return adjacency_kernel(g).multiplicity(); }

bool is_balanced(const Graph& g, const VertexFunction& f) {
  check_size(g, f);
  for (int i = 0; i < g.vertex_count(); ++i) {
    Rational s = 0;
    for (int j : g.neighbors(i)) s += f[j];
    if (s != 0) return false;
  }
  return true;
}

Rational excess(const Graph& g, const VertexFunction& f, int p) {
  check_size(g, f);
  Rational s = 0;
  for (int q : g.neighbors(p)) s += f[q];
  return s;
}

bool verify_eigenpair_exact(const Graph& g, const VertexFunction& f, const Rational& lambda) {
  check_size(g, f);
  if (is_zero_function(f)) {
    throw PreconditionError("the zero function is not an eigenfunction");
  }
  const Rational one_minus_lambda = Rational(1) - lambda;
  for (int i = 0; i < g.vertex_count(); ++i) {
    const int deg = g.degree(i);
    if (deg == 0) {
      if (f[i] * one_minus_lambda != 0) return false;
      continue;
    }
    Rational s = 0;
    for (int j : g.neighbors(i)) s += f[j];
    if (s != one_minus_lambda * deg * f[i]) return false;
  }
  return true;
}

int integer_matrix_rank(std::vector<std::vector<Int>> m) {
  return static_cast<int>(fraction_free_echelon(std::move(m)).pivot_cols.size());
}

}  // namespace lapmotif
