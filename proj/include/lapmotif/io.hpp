#pragma once

#include "lapmotif/graph.hpp"
#include "lapmotif/rational.hpp"
#include "lapmotif/spectral.hpp"

#include <string>
#include <vector>

namespace lapmotif {

// Edge-list text: '#' starts a comment line, first data line "N M", then M
// lines "u v". A leading '{' switches to the JSON form {"n": N, "edges": [[u,v],...]}.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

Graph graph_from_json(const std::string& text);
std::string graph_to_json(const Graph& g);

// Function files: lines "v a" or "v a/b", one per vertex, '#' comments;
// missing vertices default to 0. Serialization emits nonzero entries.
VertexFunction parse_vertex_function(const std::string& text, int vertex_count);
std::string serialize_vertex_function(const VertexFunction& f);

// One function per line, dense space-separated rationals.
std::string serialize_function_basis(const std::vector<VertexFunction>& basis);

// {"eigenvalues": [...], "multiplicities": [...], "tol": t} plus raw
// eigenvalues and back-transformed eigenfunctions when requested.
std::string spectrum_to_json(const Spectrum& spec, bool include_eigenvectors);

}  // namespace lapmotif
