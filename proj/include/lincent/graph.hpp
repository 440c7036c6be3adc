#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace lincent {

// Directed graph on nodes 0..n-1 with sorted, duplicate-free adjacency.
// Self-loops are normalized away on insertion (they never affect distances).
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;
};

using CountMatrix = std::vector<std::vector<long long>>;

Graph make_graph(int n, const std::vector<std::pair<int, int>>& arcs);
void add_arc(Graph& g, int u, int v);
void add_edge(Graph& g, int u, int v);  // arcs in both directions
bool has_arc(const Graph& g, int u, int v);
std::vector<std::pair<int, int>> arcs_of(const Graph& g);
Graph transpose(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);
bool strongly_connected(const Graph& g);

// Text format: optional "n <count>" header, then "u v" arc lines; lines whose
// first non-blank character is '#' are comments. Without a header the node
// count is 1 + the largest mentioned id. Throws std::runtime_error with the
// offending line number on malformed input or out-of-range ids.
Graph parse_edge_list(std::istream& in, bool undirected = false);
Graph parse_edge_list(const std::string& text, bool undirected = false);
std::string write_edge_list(const Graph& g);

// counts[k] = number of nodes at directed distance exactly k *to* node i
// (counts[0] = 1 for i itself; nodes that cannot reach i appear nowhere).
std::vector<long long> distance_counts(const Graph& g, int i);

// Row i = distance_counts(g, i); all rows padded to length n.
CountMatrix distance_count_matrix(const Graph& g);

// No two rows of the distance-count matrix are equal.
bool is_geometrically_rigid(const Graph& g);

// True when the identity is the only automorphism. Exhaustive over
// permutations; throws std::invalid_argument when n exceeds `cap`.
bool is_rigid(const Graph& g, int cap = 8);

}  // namespace lincent
