#pragma once

#include <string>
#include <utility>

#include "coarse/decomposition.hpp"
#include "coarse/distance_graph.hpp"
#include "coarse/graph.hpp"
#include "coarse/weight_fn.hpp"

namespace coarse::io {

/// Text format: comment lines start with 'c', the header is "p <n> <m>",
/// then m lines "e <u> <v>" (weighted: "e <u> <v> <num>/<den>", plain
/// integers allowed).
std::string graph_to_text(const Graph& g);
std::string graph_to_text(const WeightedGraph& g);
Graph graph_from_text(const std::string& text);
WeightedGraph weighted_graph_from_text(const std::string& text);

/// JSON mirrors: {"n": n, "edges": [[u, v], ...]}; weighted edges carry a
/// third element, an integer or "num/den" string. All *_json functions
/// exchange serialized strings so the header stays free of the json
/// library.
std::string graph_to_json(const Graph& g);
std::string graph_to_json(const WeightedGraph& g);
Graph graph_from_json(const std::string& text);
WeightedGraph weighted_graph_from_json(const std::string& text);

/// Reads a graph file, sniffing JSON (first non-space byte '{') vs text.
Graph load_graph(const std::string& path);
WeightedGraph load_weighted_graph(const std::string& path);

/// {"weights": ["num/den", ...]} with every entry a fraction string.
std::string weight_fn_to_json(const WeightFn& mu);
WeightFn weight_fn_from_json(const std::string& text);

/// "uniform", "indicator:<comma list>" or "file:<path>" (a weights JSON).
WeightFn parse_mu_spec(const std::string& spec, int n);

/// {"r", "sigma", "weighted", "I", "H": {"n", "edges"}, "phi"}.
std::string distance_graph_to_json(const DistanceGraph& dg, const PhiMap& phi);
std::pair<DistanceGraph, PhiMap> distance_graph_from_json(const std::string& text);

/// {"nodes": [{"id", "bag", "cover": [{"center", "radius"}]}],
///  "tree_edges": [[a, b], ...]}; cover omitted when absent; radius is an
/// integer or "num/den". The tree partition adds "spread".
std::string tree_decomposition_to_json(const TreeDecomposition& td);
TreeDecomposition tree_decomposition_from_json(const std::string& text);
std::string tree_partition_to_json(const TreePartition& tp);
TreePartition tree_partition_from_json(const std::string& text);

/// Undirected DOT with bags as node labels.
std::string tree_decomposition_to_dot(const TreeDecomposition& td);
std::string tree_partition_to_dot(const TreePartition& tp);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// FNV-1a 64-bit digest as 16 hex characters.
std::string fnv1a64_hex(const std::string& data);

} // namespace coarse::io
