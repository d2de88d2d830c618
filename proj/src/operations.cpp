#include "lapmotif/operations.hpp"

#include "lapmotif/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "lapmotif/spectral.hpp"

namespace lapmotif {

namespace {

void check_function_size(const Graph& g, const VertexFunction& f, const char* what) {
  if (static_cast<int>(f.size()) != g.vertex_count()) {
    throw PreconditionError(std::string(what) + " has " + std::to_string(f.size()) +
                            " values but the graph has " + std::to_string(g.vertex_count()) +
                            " vertices");
  }
}

void verify_balanced_or_die(const Graph& g, const VertexFunction& f, const char* op) {
  if (!is_balanced(g, f)) {
    throw std::logic_error(std::string(op) + " constructed an unbalanced function (defect)");
  }
}

long long integer_sqrt(long long x) {
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

}  // namespace

Motif make_motif(const Graph& host, std::vector<int> vertices) {
  if (vertices.empty()) throw PreconditionError("motif must be nonempty");
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw PreconditionError("duplicate vertex in motif");
  }
  for (int v : vertices) {
    if (v < 0 || v >= host.vertex_count()) {
      throw PreconditionError("motif vertex " + std::to_string(v) + " out of range");
    }
  }
  if (!is_connected(induced_subgraph(host, vertices))) {
    throw PreconditionError("motif does not induce a connected subgraph");
  }
  return Motif{std::move(vertices)};
}

DoubleMotifResult double_motif(const Graph& g, const Motif& motif) {
  const int n = g.vertex_count();
  const int m = motif.size();
  std::vector<int> pos(n, -1);
  for (int a = 0; a < m; ++a) {
    const int p = motif.vertices[a];
    if (p < 0 || p >= n) throw PreconditionError("motif vertex out of range");
    if (pos[p] != -1) throw PreconditionError("duplicate vertex in motif");
    pos[p] = a;
  }

  auto edges = g.edges();
  for (int a = 0; a < m; ++a) {
    const int p = motif.vertices[a];
    for (int nb : g.neighbors(p)) {
      if (pos[nb] >= 0) {
        // motif-internal edge: connect the two copies (once per direction pair)
        if (pos[nb] > a) edges.emplace_back(n + a, n + pos[nb]);
      } else {
        edges.emplace_back(n + a, nb);
      }
    }
  }

  DoubleMotifResult result;
  result.graph = Graph(n + m, edges);
  result.copy_ids.resize(m);
  for (int a = 0; a < m; ++a) result.copy_ids[a] = n + a;
  return result;
}

VertexFunction localized_eigenfunction_for_doubling(const Graph& g, const Motif& motif,
                                                    const VertexFunction& f_sigma) {
  if (static_cast<int>(f_sigma.size()) != motif.size()) {
    throw PreconditionError("motif function size does not match motif size");
  }
  if (is_zero_function(f_sigma)) {
    throw PreconditionError("motif function must be nonzero");
  }
  if (!is_balanced(induced_subgraph(g, motif.vertices), f_sigma)) {
    throw PreconditionError("motif function is not balanced on the standalone motif");
  }

  auto doubled = double_motif(g, motif);
  VertexFunction f(doubled.graph.vertex_count(), Rational(0));
  for (int a = 0; a < motif.size(); ++a) {
    f[motif.vertices[a]] = f_sigma[a];
    f[doubled.copy_ids[a]] = -f_sigma[a];
  }
  verify_balanced_or_die(doubled.graph, f, "localized_eigenfunction_for_doubling");
  return f;
}

VertexDoubleResult double_vertex(const Graph& g, int v) {
  Motif motif = make_motif(g, {v});
  auto doubled = double_motif(g, motif);
  VertexDoubleResult result;
  result.copy_id = doubled.copy_ids[0];
  result.function = localized_eigenfunction_for_doubling(g, motif, {Rational(1)});
  result.graph = std::move(doubled.graph);
  return result;
}

GeneralDoubleResult double_motif_general(const Graph& g, const Motif& motif,
                                         const VertexFunction& f, const Rational& lambda) {
  if (static_cast<int>(f.size()) != motif.size()) {
    throw PreconditionError("motif function size does not match motif size");
  }
  if (is_zero_function(f)) throw PreconditionError("motif function must be nonzero");

  // Eigenvalue relation restricted to the motif, with host degrees:
  // sum_{j in motif, j ~ i} f(j) = (1 - lambda) * n_i * f(i).
  const Rational one_minus_lambda = Rational(1) - lambda;
  std::vector<int> pos(g.vertex_count(), -1);
  for (int a = 0; a < motif.size(); ++a) pos[motif.vertices[a]] = a;
  for (int a = 0; a < motif.size(); ++a) {
    const int p = motif.vertices[a];
    Rational s = 0;
    for (int nb : g.neighbors(p)) {
      if (pos[nb] >= 0) s += f[pos[nb]];
    }
    if (s != one_minus_lambda * g.degree(p) * f[a]) {
      throw PreconditionError(
          "function does not satisfy the motif eigenvalue relation for the given lambda at vertex " +
          std::to_string(p));
    }
  }

  auto doubled = double_motif(g, motif);
  GeneralDoubleResult result;
  result.copy_ids = doubled.copy_ids;
  result.lambda = lambda;
  result.function.assign(doubled.graph.vertex_count(), Rational(0));
  for (int a = 0; a < motif.size(); ++a) {
    result.function[motif.vertices[a]] = f[a];
    result.function[doubled.copy_ids[a]] = -f[a];
  }
  if (!verify_eigenpair_exact(doubled.graph, result.function, lambda)) {
    throw std::logic_error("double_motif_general constructed a non-eigenfunction (defect)");
  }
  result.graph = std::move(doubled.graph);
  return result;
}

EdgeDoubleResult double_edge(const Graph& g, int p1, int p2) {
  if (!g.has_edge(p1, p2)) {
    throw PreconditionError("vertices " + std::to_string(p1) + " and " + std::to_string(p2) +
                            " are not adjacent");
  }
  const long long n1 = g.degree(p1);
  const long long n2 = g.degree(p2);
  const long long product = n1 * n2;
  const long long root = integer_sqrt(product);
  const bool exact = root * root == product;

  Motif motif = make_motif(g, {p1, p2});
  auto doubled = double_motif(g, motif);

  EdgeDoubleResult result;
  result.degree_product = product;
  result.exact = exact;
  // copies of p1 and p2 in that order, independent of the sorted motif order
  const int a1 = motif.vertices[0] == p1 ? 0 : 1;
  result.copy_ids = {doubled.copy_ids[a1], doubled.copy_ids[1 - a1]};

  const int total = doubled.graph.vertex_count();
  const double inv_root = 1.0 / std::sqrt(static_cast<double>(product));
  const double ratio = std::sqrt(static_cast<double>(n1) / static_cast<double>(n2));

  // From the edge relations, 1 - lambda = +-1/sqrt(n1 n2) pairs with
  // f(p2)/f(p1) = n1 (1 - lambda) = +-sqrt(n1/n2).
  auto build_branch = [&](int sign) {
    EdgeDoubleResult::Branch branch;
    branch.lambda = 1.0 - sign * inv_root;
    branch.function.assign(total, 0.0);
    branch.function[p1] = 1.0;
    branch.function[p2] = sign * ratio;
    branch.function[result.copy_ids[0]] = -1.0;
    branch.function[result.copy_ids[1]] = -sign * ratio;
    if (exact) {
      branch.lambda_exact = Rational(1) - Rational(sign, root);
      VertexFunction fm(motif.size(), Rational(0));
      fm[a1] = 1;
      fm[1 - a1] = Rational(sign * n1, root);
      auto general = double_motif_general(g, motif, fm, *branch.lambda_exact);
      branch.function_exact = std::move(general.function);
    } else {
      const double res = residual(doubled.graph, branch.function, branch.lambda);
      if (res >= 1e-9) {
        throw std::logic_error("double_edge eigenfunction residual " + std::to_string(res) +
                               " exceeds 1e-9 (defect)");
      }
    }
    return branch;
  };

  result.minus = build_branch(+1);  // lambda = 1 - 1/sqrt(n1 n2)
  result.plus = build_branch(-1);   // lambda = 1 + 1/sqrt(n1 n2)
  result.graph = std::move(doubled.graph);
  return result;
}

Graph double_graph(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (const auto& [i, j] : g.edges()) {
    edges.emplace_back(i, j);
    edges.emplace_back(n + i, n + j);
    edges.emplace_back(i, n + j);
    edges.emplace_back(j, n + i);
  }
  Graph doubled(2 * n, edges);
  for (int v = 0; v < n; ++v) {
    if (doubled.degree(v) != 2 * g.degree(v) || doubled.degree(n + v) != 2 * g.degree(v)) {
      throw std::logic_error("double_graph failed to double a degree (defect)");
    }
  }
  return doubled;
}

std::vector<VertexFunction> doubled_graph_kernel_basis(const Graph& g) {
  if (has_isolated_vertex(g)) {
    throw PreconditionError(
        "graph has an isolated vertex; its double carries no eigenvalue-1 interpretation");
  }
  const int n = g.vertex_count();
  Graph doubled = double_graph(g);
  std::vector<VertexFunction> basis;
  basis.reserve(n);
  for (int i = 0; i < n; ++i) {
    VertexFunction f(2 * n, Rational(0));
    f[i] = 1;
    f[n + i] = -1;
    verify_balanced_or_die(doubled, f, "doubled_graph_kernel_basis");
    basis.push_back(std::move(f));
  }
  return basis;
}

SplitResult split_graph(const Graph& g, const SplitSpec& spec, const VertexFunction& f1) {
  const int n = g.vertex_count();
  check_function_size(g, f1, "f1");
  if (!is_balanced(g, f1)) throw PreconditionError("f1 is not balanced on the host graph");

  // side[v]: 0 in sigma0, 1 in sigma1, 2 in sigma2
  std::vector<int> side(n, -1);
  auto assign = [&](const std::vector<int>& set, int which) {
    for (int v : set) {
      if (v < 0 || v >= n) throw PreconditionError("partition vertex out of range");
      if (side[v] != -1) throw PreconditionError("vertex " + std::to_string(v) + " assigned twice");
      side[v] = which;
    }
  };
  assign(spec.sigma0, 0);
  assign(spec.sigma1, 1);
  assign(spec.sigma2, 2);
  for (int v = 0; v < n; ++v) {
    if (side[v] == -1) {
      throw PreconditionError("vertex " + std::to_string(v) + " missing from the partition");
    }
  }

  std::vector<int> sigma0 = spec.sigma0;
  std::sort(sigma0.begin(), sigma0.end());
  std::vector<int> copy2(n, -1), bridge(n, -1);
  const int k = static_cast<int>(sigma0.size());
  for (int i = 0; i < k; ++i) {
    copy2[sigma0[i]] = n + i;
    bridge[sigma0[i]] = n + k + i;
  }

  auto routed = spec.edge_side;
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges()) {
    const int su = side[u], sv = side[v];
    if ((su == 1 && sv == 2) || (su == 2 && sv == 1)) {
      throw PreconditionError("edge between sigma1 and sigma2 is not allowed");
    }
    if (su == 0 && sv == 0) {
      auto it = routed.find({u, v});
      if (it == routed.end()) {
        throw PreconditionError("sigma0-internal edge (" + std::to_string(u) + ", " +
                                std::to_string(v) + ") has no side assignment");
      }
      if (it->second == 1) {
        edges.emplace_back(u, v);
      } else if (it->second == 2) {
        edges.emplace_back(copy2[u], copy2[v]);
      } else {
        throw PreconditionError("edge side must be 1 or 2");
      }
      routed.erase(it);
    } else if (su == 0 || sv == 0) {
      const int q = su == 0 ? u : v;
      const int s = su == 0 ? v : u;
      if (side[s] == 1) {
        edges.emplace_back(q, s);
      } else {
        edges.emplace_back(copy2[q], s);
      }
    } else {
      edges.emplace_back(u, v);
    }
  }
  if (!routed.empty()) {
    throw PreconditionError("edge_side contains a key that is not a sigma0-internal edge");
  }
  for (int q : sigma0) {
    edges.emplace_back(q, bridge[q]);
    edges.emplace_back(copy2[q], bridge[q]);
  }

  SplitResult result;
  result.graph = Graph(n + 2 * k, edges);
  result.sigma0 = sigma0;
  result.copy2_ids.resize(k);
  result.bridge_ids.resize(k);
  result.function.assign(n + 2 * k, Rational(0));
  for (int v = 0; v < n; ++v) {
    result.function[v] = side[v] == 2 ? -f1[v] : f1[v];
  }
  for (int i = 0; i < k; ++i) {
    const int q = sigma0[i];
    result.copy2_ids[i] = copy2[q];
    result.bridge_ids[i] = bridge[q];
    result.function[copy2[q]] = -f1[q];
    // bridge value: minus the neighbor sum of q inside copy 1
    Rational s = 0;
    for (int nb : result.graph.neighbors(q)) {
      if (nb != bridge[q]) s += result.function[nb];
    }
    result.function[bridge[q]] = -s;
  }
  verify_balanced_or_die(result.graph, result.function, "split_graph");
  return result;
}

AttachChain2Result attach_chain2(const Graph& g, const VertexFunction& f1, int p) {
  check_function_size(g, f1, "f1");
  if (p < 0 || p >= g.vertex_count()) throw PreconditionError("vertex id out of range");
  if (!is_balanced(g, f1)) throw PreconditionError("f1 is not balanced on the host graph");

  AttachChain2Result result;
  result.p1_id = g.vertex_count();
  result.p2_id = g.vertex_count() + 1;
  auto edges = g.edges();
  edges.emplace_back(p, result.p1_id);
  edges.emplace_back(result.p1_id, result.p2_id);
  result.graph = Graph(g.vertex_count() + 2, edges);
  result.function = f1;
  result.function.push_back(Rational(0));
  result.function.push_back(-f1[p]);
  verify_balanced_or_die(result.graph, result.function, "attach_chain2");
  return result;
}

JoinResult join_graphs(const Graph& g1, int p1, const Graph& g2, int p2) {
  const int n1 = g1.vertex_count();
  const int n2 = g2.vertex_count();
  if (p1 < 0 || p1 >= n1 || p2 < 0 || p2 >= n2) {
    throw PreconditionError("join vertex id out of range");
  }
  JoinResult result;
  result.map_g2.resize(n2);
  for (int v = 0; v < n2; ++v) {
    if (v == p2) {
      result.map_g2[v] = p1;
    } else {
      result.map_g2[v] = n1 + v - (v > p2 ? 1 : 0);
    }
  }
  auto edges = g1.edges();
  for (const auto& [u, v] : g2.edges()) {
    edges.emplace_back(result.map_g2[u], result.map_g2[v]);
  }
  result.graph = Graph(n1 + n2 - 1, edges);
  return result;
}

VertexFunction join_eigenfunctions(const Graph& g1, const VertexFunction& f1, const Graph& g2,
                                   const VertexFunction& f2, const Rational& lambda, int p1,
                                   int p2) {
  check_function_size(g1, f1, "f1");
  check_function_size(g2, f2, "f2");
  const bool zero1 = is_zero_function(f1);
  const bool zero2 = is_zero_function(f2);
  if (zero1 && zero2) throw PreconditionError("both functions are identically zero");

  if (lambda == 1) {
    // Relaxed join: balance may fail at the join points only, with opposite
    // excesses there and matching values.
    for (int v = 0; v < g1.vertex_count(); ++v) {
      if (v != p1 && excess(g1, f1, v) != 0) {
        throw PreconditionError("f1 has nonzero excess away from the join vertex");
      }
    }
    for (int v = 0; v < g2.vertex_count(); ++v) {
      if (v != p2 && excess(g2, f2, v) != 0) {
        throw PreconditionError("f2 has nonzero excess away from the join vertex");
      }
    }
    if (excess(g1, f1, p1) != -excess(g2, f2, p2)) {
      throw PreconditionError("join-vertex excesses do not cancel");
    }
    if (f1[p1] != f2[p2]) {
      throw PreconditionError("eigenvalue 1 joining requires f1(p1) = f2(p2)");
    }
  } else {
    if (!zero1 && !verify_eigenpair_exact(g1, f1, lambda)) {
      throw PreconditionError("f1 is not an exact eigenfunction for the given lambda");
    }
    if (!zero2 && !verify_eigenpair_exact(g2, f2, lambda)) {
      throw PreconditionError("f2 is not an exact eigenfunction for the given lambda");
    }
    if (f1[p1] != 0 || f2[p2] != 0) {
      throw PreconditionError("joining for lambda != 1 requires both functions to vanish at the join");
    }
  }

  auto joined = join_graphs(g1, p1, g2, p2);
  VertexFunction f(joined.graph.vertex_count(), Rational(0));
  for (int v = 0; v < g1.vertex_count(); ++v) f[v] = f1[v];
  for (int v = 0; v < g2.vertex_count(); ++v) f[joined.map_g2[v]] = f2[v];
  f[p1] = f1[p1];  // f1(p1) == f2(p2) when both sides carry a value
  if (!verify_eigenpair_exact(joined.graph, f, lambda)) {
    throw std::logic_error("join_eigenfunctions constructed a non-eigenfunction (defect)");
  }
  return f;
}

namespace {

void check_pair_list(const Graph& g, const std::vector<std::pair<int, int>>& pairs) {
  if (pairs.empty()) throw PreconditionError("pair list must be nonempty");
  std::set<int> used;
  for (const auto& [p, q] : pairs) {
    if (p < 0 || p >= g.vertex_count() || q < 0 || q >= g.vertex_count()) {
      throw PreconditionError("pair vertex out of range");
    }
    if (p == q) throw PreconditionError("pair joins a vertex with itself");
    if (!used.insert(p).second || !used.insert(q).second) {
      throw PreconditionError("a vertex appears in more than one pair");
    }
  }
}

void check_zero_excess_off_pairs(const Graph& g, const std::vector<std::pair<int, int>>& pairs,
                                 const VertexFunction& fn) {
  std::set<int> paired;
  for (const auto& [p, q] : pairs) {
    paired.insert(p);
    paired.insert(q);
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!paired.count(v) && excess(g, fn, v) != 0) {
      throw PreconditionError("function has nonzero excess at unpaired vertex " +
                              std::to_string(v));
    }
  }
}

}  // namespace

PairOpResult merge_pairs_with_function(const Graph& g, const std::vector<std::pair<int, int>>& pairs,
                                       const VertexFunction& fn) {
  check_function_size(g, fn, "function");
  check_pair_list(g, pairs);
  check_zero_excess_off_pairs(g, pairs, fn);

  for (const auto& [p, q] : pairs) {
    if (g.has_edge(p, q)) {
      throw PreconditionError("pair (" + std::to_string(p) + ", " + std::to_string(q) +
                              ") is adjacent; identification would create a self-loop");
    }
    const auto& np = g.neighbors(p);
    const auto& nq = g.neighbors(q);
    std::vector<int> common;
    std::set_intersection(np.begin(), np.end(), nq.begin(), nq.end(), std::back_inserter(common));
    if (!common.empty()) {
      throw PreconditionError("pair (" + std::to_string(p) + ", " + std::to_string(q) +
                              ") has a common neighbor");
    }
    if (fn[p] != fn[q]) {
      throw PreconditionError("pair values differ: f(" + std::to_string(p) + ") != f(" +
                              std::to_string(q) + ")");
    }
    if (excess(g, fn, p) != -excess(g, fn, q)) {
      throw PreconditionError("pair excesses do not cancel at (" + std::to_string(p) + ", " +
                              std::to_string(q) + ")");
    }
  }

  const int n = g.vertex_count();
  std::vector<int> rep(n);
  for (int v = 0; v < n; ++v) rep[v] = v;
  for (const auto& [p, q] : pairs) rep[q] = p;

  PairOpResult result;
  result.vertex_map.assign(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (rep[v] == v) result.vertex_map[v] = next++;
  }
  for (int v = 0; v < n; ++v) {
    if (rep[v] != v) result.vertex_map[v] = result.vertex_map[rep[v]];
  }

  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges()) {
    int a = result.vertex_map[u], b = result.vertex_map[v];
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) {
      throw PreconditionError("identification would create a parallel edge between new ids " +
                              std::to_string(a) + " and " + std::to_string(b));
    }
    edges.emplace_back(a, b);
  }

  result.graph = Graph(next, edges);
  result.function.assign(next, Rational(0));
  for (int v = 0; v < n; ++v) result.function[result.vertex_map[v]] = fn[v];
  verify_balanced_or_die(result.graph, result.function, "merge_pairs_with_function");
  return result;
}

PairOpResult connect_pairs_with_function(const Graph& g,
                                         const std::vector<std::pair<int, int>>& pairs,
                                         const VertexFunction& fn) {
  check_function_size(g, fn, "function");
  check_pair_list(g, pairs);
  check_zero_excess_off_pairs(g, pairs, fn);

  for (const auto& [p, q] : pairs) {
    if (g.has_edge(p, q)) {
      throw PreconditionError("edge (" + std::to_string(p) + ", " + std::to_string(q) +
                              ") is already present");
    }
    if (fn[p] != -excess(g, fn, q) || fn[q] != -excess(g, fn, p)) {
      throw PreconditionError("pair (" + std::to_string(p) + ", " + std::to_string(q) +
                              ") violates the connection relation f(p) = -e(q), f(q) = -e(p)");
    }
  }

  auto edges = g.edges();
  for (const auto& [p, q] : pairs) edges.emplace_back(p, q);

  PairOpResult result;
  result.graph = Graph(g.vertex_count(), edges);
  result.function = fn;
  result.vertex_map.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) result.vertex_map[v] = v;
  verify_balanced_or_die(result.graph, result.function, "connect_pairs_with_function");
  return result;
}

long long count_subgraph_embeddings(const Graph& g, const Graph& pattern, bool induced) {
  const int m = pattern.vertex_count();
  if (m < 1) throw PreconditionError("pattern must be nonempty");
  if (m > 8) throw PreconditionError("pattern is limited to 8 vertices");
  const int n = g.vertex_count();
  if (m > n) return 0;

  std::set<std::vector<int>> images;
  std::vector<int> map(m, -1);
  std::vector<bool> used(n, false);

  auto extend = [&](auto&& self, int k) -> void {
    if (k == m) {
      std::vector<int> image(map);
      std::sort(image.begin(), image.end());
      images.insert(std::move(image));
      return;
    }
    for (int h = 0; h < n; ++h) {
      if (used[h]) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        const bool pat = pattern.has_edge(j, k);
        const bool host = g.has_edge(map[j], h);
        if (pat && !host) ok = false;
        if (induced && !pat && host) ok = false;
      }
      if (!ok) continue;
      map[k] = h;
      used[h] = true;
      self(self, k + 1);
      used[h] = false;
      map[k] = -1;
    }
  };
  extend(extend, 0);
  return static_cast<long long>(images.size());
}

}  // namespace lapmotif
