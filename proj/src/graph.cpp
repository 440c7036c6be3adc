#include "lincent/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lincent {

namespace {

void check_node(const Graph& g, int u) {
  if (u < 0 || u >= g.n) throw std::invalid_argument("node id out of range");
}

// Nodes reachable from `start` along g.adj.
std::vector<char> reachable(const Graph& g, int start) {
  std::vector<char> seen(g.n, 0);
  std::deque<int> queue{start};
  seen[start] = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : g.adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        queue.push_back(v);
      }
  }
  return seen;
}

}  // namespace

Graph make_graph(int n, const std::vector<std::pair<int, int>>& arcs) {
  if (n < 0) throw std::invalid_argument("negative node count");
  Graph g;
  g.n = n;
  g.adj.resize(n);
  for (auto [u, v] : arcs) add_arc(g, u, v);
  return g;
}

void add_arc(Graph& g, int u, int v) {
  check_node(g, u);
  check_node(g, v);
  if (u == v) return;
  auto& out = g.adj[u];
  auto it = std::lower_bound(out.begin(), out.end(), v);
  if (it == out.end() || *it != v) out.insert(it, v);
}

void add_edge(Graph& g, int u, int v) {
  add_arc(g, u, v);
  add_arc(g, v, u);
}

bool has_arc(const Graph& g, int u, int v) {
  check_node(g, u);
  check_node(g, v);
  const auto& out = g.adj[u];
  return std::binary_search(out.begin(), out.end(), v);
}

std::vector<std::pair<int, int>> arcs_of(const Graph& g) {
  std::vector<std::pair<int, int>> arcs;
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u]) arcs.emplace_back(u, v);
  return arcs;
}

Graph transpose(const Graph& g) {
  Graph t;
  t.n = g.n;
  t.adj.resize(g.n);
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u]) t.adj[v].push_back(u);
  for (auto& out : t.adj) std::sort(out.begin(), out.end());
  return t;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g;
  g.n = a.n + b.n;
  g.adj.resize(g.n);
  for (int u = 0; u < a.n; ++u) g.adj[u] = a.adj[u];
  for (int u = 0; u < b.n; ++u) {
    g.adj[a.n + u].reserve(b.adj[u].size());
    for (int v : b.adj[u]) g.adj[a.n + u].push_back(a.n + v);
  }
  return g;
}

bool strongly_connected(const Graph& g) {
  if (g.n <= 1) return true;
  auto fwd = reachable(g, 0);
  if (!std::all_of(fwd.begin(), fwd.end(), [](char s) { return s != 0; })) return false;
  auto bwd = reachable(transpose(g), 0);
  return std::all_of(bwd.begin(), bwd.end(), [](char s) { return s != 0; });
}

Graph parse_edge_list(std::istream& in, bool undirected) {
  std::vector<std::pair<int, int>> arcs;
  std::string line;
  long line_no = 0;
  bool have_header = false, first_content = true;
  int header_n = 0;
  int max_id = -1;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream row(line);
    if (first_content) {
      first_content = false;
      std::string tag;
      row >> tag;
      if (tag == "n") {
        long long count = -1;
        if (!(row >> count) || count < 0 || !(row >> std::ws).eof())
          throw std::runtime_error("line " + std::to_string(line_no) + ": malformed header");
        have_header = true;
        header_n = static_cast<int>(count);
        continue;
      }
      row.clear();
      row.seekg(0);
    }
    long long u = 0, v = 0;
    if (!(row >> u >> v) || !(row >> std::ws).eof() || u < 0 || v < 0)
      throw std::runtime_error("line " + std::to_string(line_no) + ": malformed arc line");
    if (have_header && (u >= header_n || v >= header_n))
      throw std::runtime_error("line " + std::to_string(line_no) + ": node id out of range");
    arcs.emplace_back(static_cast<int>(u), static_cast<int>(v));
    max_id = std::max<long long>({max_id, u, v});
  }
  int n = have_header ? header_n : max_id + 1;
  Graph g = make_graph(n, arcs);
  if (undirected)
    for (auto [u, v] : arcs) add_arc(g, v, u);
  return g;
}

Graph parse_edge_list(const std::string& text, bool undirected) {
  std::istringstream in(text);
  return parse_edge_list(in, undirected);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.n << "\n";
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u]) out << u << " " << v << "\n";
  return out.str();
}

std::vector<long long> distance_counts(const Graph& g, int i) {
  check_node(g, i);
  return distance_count_matrix(g)[i];
}

CountMatrix distance_count_matrix(const Graph& g) {
  Graph t = transpose(g);
  CountMatrix c(g.n, std::vector<long long>(g.n, 0));
  std::vector<int> dist(g.n);
  for (int i = 0; i < g.n; ++i) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<int> queue{i};
    dist[i] = 0;
    c[i][0] = 1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : t.adj[u])
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          ++c[i][dist[v]];
          queue.push_back(v);
        }
    }
  }
  return c;
}

bool is_geometrically_rigid(const Graph& g) {
  CountMatrix c = distance_count_matrix(g);
  std::sort(c.begin(), c.end());
  return std::adjacent_find(c.begin(), c.end()) == c.end();
}

bool is_rigid(const Graph& g, int cap) {
  if (g.n > cap) throw std::invalid_argument("is_rigid: node count exceeds cap");
  std::vector<int> perm(g.n);
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin(), perm.end())) {
    bool automorphism = true;
    for (int u = 0; u < g.n && automorphism; ++u)
      for (int v : g.adj[u])
        if (!has_arc(g, perm[u], perm[v])) {
          automorphism = false;
          break;
        }
    // A bijection mapping every arc to an arc maps the finite arc set onto
    // itself, so forward preservation already makes perm an automorphism.
    if (automorphism) return false;
  }
  return true;
}

}  // namespace lincent
