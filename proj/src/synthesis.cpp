#include "lapmotif/synthesis.hpp"

#include "lapmotif/exact_balance.hpp"
#include "lapmotif/operations.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace lapmotif {

namespace {

Block checked(Block b, const char* op) {
  if (!verify_block(b)) {
    throw std::logic_error(std::string(op) + " produced an invalid block (defect)");
  }
  return b;
}

// (0, 0): 3-chain with values (1, 0, -1) and p0 in the middle. Keeps p0 at
// positive degree so the block stays attachable.
Block chain3_block() {
  Block b;
  b.graph = make_chain(3);
  b.p0 = 1;
  b.f = {Rational(1), Rational(0), Rational(-1)};
  b.n = 0;
  b.m = 0;
  return checked(std::move(b), "chain3_block");
}

Block two_one() { return rotate_block(basic_block(BlockKind::triangle, 1)); }      // (2, 1)
Block two_minus_one() {                                                            // (2, -1)
  return negate_block(rotate_block(basic_block(BlockKind::pentagon, 1)));
}

Block join_copies(const Block& prototype, long long count) {
  std::vector<Block> copies(static_cast<std::size_t>(count), prototype);
  return join_blocks(copies);
}

Block plus_two(long long a) { return rotate_block(realize_pair(2, -a)); }          // (a, 2)
Block minus_two(long long a) {                                                    // (a, -2)
  return negate_block(rotate_block(realize_pair(2, a)));
}

}  // namespace

Block basic_block(BlockKind kind, int count) {
  if (count < 1) throw PreconditionError("block needs at least one copy");
  Block b;
  if (kind == BlockKind::triangle) {
    // count triangles sharing p0 = 0; value 1 at p0, -1 elsewhere.
    b.graph = make_petal(count);
    b.p0 = 0;
    b.f.assign(2 * count + 1, Rational(-1));
    b.f[0] = 1;
    b.n = 1;
    b.m = -2 * count;
  } else {
    // count pentagons sharing p0 = 0; around each: 1, -1, -1, 1 after p0.
    std::vector<std::pair<int, int>> edges;
    b.f.assign(4 * count + 1, Rational(0));
    b.f[0] = 1;
    for (int i = 0; i < count; ++i) {
      const int base = 4 * i + 1;
      edges.emplace_back(0, base);
      edges.emplace_back(base, base + 1);
      edges.emplace_back(base + 1, base + 2);
      edges.emplace_back(base + 2, base + 3);
      edges.emplace_back(base + 3, 0);
      b.f[base] = 1;
      b.f[base + 1] = -1;
      b.f[base + 2] = -1;
      b.f[base + 3] = 1;
    }
    b.graph = Graph(4 * count + 1, edges);
    b.p0 = 0;
    b.n = 1;
    b.m = 2 * count;
  }
  return checked(std::move(b), "basic_block");
}

Block rotate_block(const Block& b) {
  Block out;
  out.graph = add_pending_vertex(b.graph, b.p0);
  out.p0 = b.graph.vertex_count();
  out.f = b.f;
  out.f.push_back(Rational(-b.m));
  out.n = -b.m;
  out.m = b.n;
  return checked(std::move(out), "rotate_block");
}

Block negate_block(const Block& b) {
  Block out;
  out.graph = b.graph;
  out.p0 = b.p0;
  out.f.reserve(b.f.size());
  for (const auto& q : b.f) out.f.push_back(-q);
  out.n = -b.n;
  out.m = -b.m;
  return checked(std::move(out), "negate_block");
}

Block join_blocks(const std::vector<Block>& blocks) {
  if (blocks.empty()) throw PreconditionError("join_blocks needs at least one block");
  for (const auto& b : blocks) {
    if (b.n != blocks.front().n) {
      throw PreconditionError("join_blocks requires equal values at every p0 (got " +
                              b.n.str() + " and " + blocks.front().n.str() + ")");
    }
  }
  Block acc = blocks.front();
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    const Block& next = blocks[i];
    auto joined = join_graphs(acc.graph, acc.p0, next.graph, next.p0);
    VertexFunction f(joined.graph.vertex_count(), Rational(0));
    for (int v = 0; v < acc.graph.vertex_count(); ++v) f[v] = acc.f[v];
    for (int v = 0; v < next.graph.vertex_count(); ++v) f[joined.map_g2[v]] = next.f[v];
    f[acc.p0] = acc.f[acc.p0];
    acc.graph = std::move(joined.graph);
    acc.f = std::move(f);
    acc.m += next.m;
  }
  return checked(std::move(acc), "join_blocks");
}

Block realize_pair(long long n, long long m) {
  const bool n_odd = n % 2 != 0;
  const bool m_odd = m % 2 != 0;
  if (n_odd && m_odd) throw ParityObstruction(n, m);

  if (n == 0 && m == 0) return chain3_block();
  if (n == 1) {
    if (m < 0) return basic_block(BlockKind::triangle, static_cast<int>(-m / 2));
    if (m > 0) return basic_block(BlockKind::pentagon, static_cast<int>(m / 2));
    return join_blocks({basic_block(BlockKind::pentagon, 1), basic_block(BlockKind::triangle, 1)});
  }
  if (n == -1) return negate_block(realize_pair(1, -m));
  if (n == 2) {
    if (m > 0) return join_copies(two_one(), m);
    if (m < 0) return join_copies(two_minus_one(), -m);
    return join_blocks({two_one(), two_minus_one()});
  }
  if (n == -2) return negate_block(realize_pair(2, -m));
  if (!m_odd) {
    if (m > 0) return join_copies(plus_two(n), m / 2);
    if (m < 0) return join_copies(minus_two(n), -m / 2);
    return join_blocks({plus_two(n), minus_two(n)});
  }
  // m odd, n even: rotate (m, -n) into place via (n, m) = (-(-n), m).
  return rotate_block(realize_pair(m, -n));
}

bool verify_block(const Block& b) {
  const int n = b.graph.vertex_count();
  if (static_cast<int>(b.f.size()) != n) return false;
  if (b.p0 < 0 || b.p0 >= n) return false;
  if (!is_integer_valued(b.f)) return false;
  for (int v = 0; v < n; ++v) {
    if (v != b.p0 && excess(b.graph, b.f, v) != 0) return false;
  }
  if (Rational(b.n) != b.f[b.p0]) return false;
  if (Rational(b.m) != excess(b.graph, b.f, b.p0)) return false;
  // parity identity: n*m = 2 * sum over edges of f(q) f(r)
  Rational edge_sum = 0;
  for (const auto& [u, v] : b.graph.edges()) edge_sum += b.f[u] * b.f[v];
  if (Rational(b.n * b.m) != 2 * edge_sum) return false;
  return (b.n * b.m) % 2 == 0;
}

EmbedResult embed_with_eigenfunction(const Graph& sigma, const VertexFunction& f) {
  if (static_cast<int>(f.size()) != sigma.vertex_count()) {
    throw PreconditionError("function size does not match vertex count");
  }
  if (!is_integer_valued(f)) {
    throw PreconditionError("embedding requires an integer-valued function");
  }

  EmbedResult result;
  result.graph = sigma;
  result.function = f;

  // Parity gadget: one vertex with value 1 wired to every p with odd
  // f(p) * e(p). Their count is even, so all downstream pairs have even
  // products.
  std::vector<int> odd_product;
  for (int p = 0; p < sigma.vertex_count(); ++p) {
    const Int prod = numerator(f[p]) * numerator(excess(sigma, f, p));
    if (prod % 2 != 0) odd_product.push_back(p);
  }
  if (!odd_product.empty()) {
    if (odd_product.size() % 2 != 0) {
      throw std::logic_error("odd-product vertex set has odd size (defect)");
    }
    result.gadget_id = result.graph.vertex_count();
    result.graph = add_vertex_with_neighbors(result.graph, odd_product);
    result.function.push_back(Rational(1));
  }

  // Residual excesses before any attachment; attachments only touch their
  // own root vertex.
  const int core = result.graph.vertex_count();
  std::vector<Rational> residual_excess(core);
  for (int p = 0; p < core; ++p) residual_excess[p] = excess(result.graph, result.function, p);

  for (int p = 0; p < core; ++p) {
    if (result.function[p] == 0 && residual_excess[p] == 0) continue;
    const long long value = to_long_checked(numerator(result.function[p]));
    const long long target = to_long_checked(numerator(-residual_excess[p]));
    Block block = realize_pair(value, target);
    auto joined = join_graphs(result.graph, p, block.graph, block.p0);
    VertexFunction extended(joined.graph.vertex_count(), Rational(0));
    for (int v = 0; v < result.graph.vertex_count(); ++v) extended[v] = result.function[v];
    for (int v = 0; v < block.graph.vertex_count(); ++v) {
      extended[joined.map_g2[v]] = block.f[v];
    }
    extended[p] = result.function[p];
    result.graph = std::move(joined.graph);
    result.function = std::move(extended);
    result.attachments.emplace_back(p, block.graph.vertex_count());
  }

  if (!is_balanced(result.graph, result.function)) {
    throw std::logic_error("embed_with_eigenfunction produced an unbalanced function (defect)");
  }
  return result;
}

}  // namespace lapmotif
