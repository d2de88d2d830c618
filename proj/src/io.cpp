#include "lapmotif/io.hpp"

#include "lapmotif/errors.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>

namespace lapmotif {

namespace {

using nlohmann::json;

// Strips comments and blank lines; returns the payload tokens per line.
std::vector<std::vector<std::string>> data_lines(const std::string& text) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (fields >> tok) tokens.push_back(tok);
    if (!tokens.empty()) lines.push_back(std::move(tokens));
  }
  return lines;
}

int parse_int(const std::string& tok, const char* what) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(tok, &used);
    if (used != tok.size()) throw ParseError("");
    return value;
  } catch (const std::exception&) {
    throw ParseError(std::string("bad ") + what + " '" + tok + "'");
  }
}

}  // namespace

Graph parse_graph(const std::string& text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c == '{') return graph_from_json(text);
    break;
  }
  auto lines = data_lines(text);
  if (lines.empty()) throw ParseError("empty graph file");
  if (lines[0].size() != 2) throw ParseError("header must be 'N M'");
  const int n = parse_int(lines[0][0], "vertex count");
  const int m = parse_int(lines[0][1], "edge count");
  if (n < 0 || m < 0) throw ParseError("negative counts in header");
  if (static_cast<int>(lines.size()) - 1 != m) {
    throw ParseError("expected " + std::to_string(m) + " edge lines, found " +
                     std::to_string(lines.size() - 1));
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (int k = 1; k <= m; ++k) {
    if (lines[k].size() != 2) throw ParseError("edge line must be 'u v'");
    const int u = parse_int(lines[k][0], "vertex id");
    const int v = parse_int(lines[k][1], "vertex id");
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError("vertex id out of range on edge line " + std::to_string(k));
    }
    if (u == v) throw ParseError("self-loop on edge line " + std::to_string(k));
    edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  const auto edges = g.edges();
  out << g.vertex_count() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

Graph graph_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad graph JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
    throw ParseError("graph JSON needs fields 'n' and 'edges'");
  }
  if (!doc["n"].is_number_integer()) throw ParseError("'n' must be an integer");
  const int n = doc["n"].get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw ParseError("each edge must be a pair of integers");
    }
    const int u = e[0].get<int>();
    const int v = e[1].get<int>();
    if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError("vertex id out of range in edge list");
    if (u == v) throw ParseError("self-loop in edge list");
    edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

std::string graph_to_json(const Graph& g) {
  json doc;
  doc["n"] = g.vertex_count();
  doc["edges"] = json::array();
  for (const auto& [u, v] : g.edges()) doc["edges"].push_back({u, v});
  return doc.dump();
}

VertexFunction parse_vertex_function(const std::string& text, int vertex_count) {
  VertexFunction f(vertex_count, Rational(0));
  std::vector<bool> seen(vertex_count, false);
  for (const auto& tokens : data_lines(text)) {
    if (tokens.size() != 2) throw ParseError("function line must be 'v value'");
    const int v = parse_int(tokens[0], "vertex id");
    if (v < 0 || v >= vertex_count) {
      throw ParseError("vertex id " + std::to_string(v) + " out of range [0, " +
                       std::to_string(vertex_count) + ")");
    }
    if (seen[v]) throw ParseError("vertex " + std::to_string(v) + " assigned twice");
    seen[v] = true;
    f[v] = parse_rational(tokens[1]);
  }
  return f;
}

std::string serialize_vertex_function(const VertexFunction& f) {
  std::ostringstream out;
  for (std::size_t v = 0; v < f.size(); ++v) {
    if (f[v] != 0) out << v << ' ' << format_rational(f[v]) << '\n';
  }
  return out.str();
}

std::string serialize_function_basis(const std::vector<VertexFunction>& basis) {
  std::ostringstream out;
  for (const auto& f : basis) {
    for (std::size_t v = 0; v < f.size(); ++v) {
      if (v) out << ' ';
      out << format_rational(f[v]);
    }
    out << '\n';
  }
  return out.str();
}

std::string spectrum_to_json(const Spectrum& spec, bool include_eigenvectors) {
  json doc;
  doc["eigenvalues"] = spec.values;
  doc["multiplicities"] = spec.multiplicities;
  doc["tol"] = spec.grouping_tol;
  if (include_eigenvectors) {
    doc["raw_eigenvalues"] = spec.all_values;
    auto vectors = json::array();
    for (int k = 0; k < spec.vertex_count(); ++k) vectors.push_back(spec.eigenfunction(k));
    doc["eigenvectors"] = std::move(vectors);
  }
  return doc.dump();
}

}  // namespace lapmotif
