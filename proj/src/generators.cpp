#include "lincent/generators.hpp"

#include <stdexcept>

namespace lincent {

Graph gen_hub_cycle(int n) {
  if (n < 4) throw std::invalid_argument("gen_hub_cycle: n must be >= 4");
  Graph g = make_graph(n, {});
  for (int i = 0; i + 1 < n; ++i) add_arc(g, i, i + 1);
  for (int j = 1; j < n; ++j) add_arc(g, j, 0);
  add_arc(g, 0, n - 1);
  return g;
}

Graph gen_triangular(int n) {
  if (n < 3) throw std::invalid_argument("gen_triangular: n must be >= 3");
  Graph g = make_graph(n, {});
  for (int i = 0; i + 1 < n; ++i) add_arc(g, i, i + 1);
  for (int j = 2; j < n; ++j) add_arc(g, j, 1);
  return g;
}

Graph gen_gprime(int n) {
  if (n < 5) throw std::invalid_argument("gen_gprime: n must be >= 5");
  Graph g = make_graph(n, {});
  for (int i = 0; i <= n - 5; ++i) add_arc(g, i, i + 1);
  add_arc(g, n - 4, n - 1);
  add_arc(g, n - 1, n - 2);
  add_arc(g, n - 2, n - 1);
  add_arc(g, n - 4, n - 3);
  for (int j = 1; j < n; ++j) add_arc(g, j, 0);
  return g;
}

LabeledGraph gen_clique_cycle(int k, int p, bool bridged) {
  if (k < 3 || p < 3) throw std::invalid_argument("gen_clique_cycle: k and p must be >= 3");
  LabeledGraph out;
  out.g = make_graph(k + p, {});
  out.x = 0;
  out.y = k;
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) add_edge(out.g, u, v);
  for (int i = 0; i < p; ++i) add_arc(out.g, k + i, k + (i + 1) % p);
  if (bridged) add_edge(out.g, out.x, out.y);
  return out;
}

LabeledGraph gen_distinguisher(DistinguisherKind kind, int h, int k, long long s,
                               long long p, long long q, long long t) {
  if (h < 1) throw std::invalid_argument("gen_distinguisher: h must be >= 1");
  if (s < 0 || p < 0 || q < 0 || t < 0)
    throw std::invalid_argument("gen_distinguisher: leaf counts must be >= 0");
  LabeledGraph out;
  if (kind == DistinguisherKind::Connected) {
    if (k < h + 2) throw std::invalid_argument("gen_distinguisher: connected needs k >= h + 2");
    const int backbone = k + h - 1;
    const int u = h - 1, f = h, gg = k - 2, v = k - 1;
    long long n = backbone + s + p + q + t;
    out.g = make_graph(static_cast<int>(n), {});
    out.x = 0;
    out.y = backbone - 1;
    for (int i = 0; i + 1 < backbone; ++i) add_edge(out.g, i, i + 1);
    int next = backbone;
    for (long long i = 0; i < s; ++i) add_edge(out.g, u, next++);
    for (long long i = 0; i < p; ++i) add_edge(out.g, f, next++);
    for (long long i = 0; i < q; ++i) add_edge(out.g, gg, next++);
    for (long long i = 0; i < t; ++i) add_edge(out.g, v, next++);
  } else {
    if (k < h + 1) throw std::invalid_argument("gen_distinguisher: disjoint needs k > h");
    long long n = 2 * k + s + p + q + t;
    out.g = make_graph(static_cast<int>(n), {});
    out.x = 0;
    for (int i = 0; i + 1 < k; ++i) add_edge(out.g, i, i + 1);
    int next = k;
    for (long long i = 0; i < s; ++i) add_edge(out.g, h - 1, next++);
    for (long long i = 0; i < p; ++i) add_edge(out.g, k - 1, next++);
    const int base = next;
    out.y = base;
    for (int i = 0; i + 1 < k; ++i) add_edge(out.g, base + i, base + i + 1);
    next = base + k;
    for (long long i = 0; i < t; ++i) add_edge(out.g, base + h - 1, next++);
    for (long long i = 0; i < q; ++i) add_edge(out.g, base + k - 1, next++);
  }
  return out;
}

Fixture gen_fixture(const std::string& name) {
  Fixture out;
  if (name == "lin-counterexample") {
    out.g = make_graph(24, {});
    auto path = [&](int first, int len) {
      for (int i = 0; i < len; ++i) add_edge(out.g, first + i, first + i + 1);
    };
    path(0, 3);   // u = 0
    path(4, 2);   // v = 4
    path(7, 3);   // spider centered at 7, legs of length 3
    path(11, 2);
    add_edge(out.g, 7, 11);
    path(14, 2);
    add_edge(out.g, 7, 14);
    path(17, 2);  // spider centered at 17, legs of length 2
    path(20, 1);
    add_edge(out.g, 17, 20);
    path(22, 1);
    add_edge(out.g, 17, 22);
    out.labels = {{"u", 0}, {"v", 4}, {"x", 7}, {"y", 17}};
    return out;
  }
  if (name == "rigid3") {
    out.g = make_graph(3, {{0, 1}, {1, 0}, {1, 2}, {2, 0}});
    return out;
  }
  throw std::invalid_argument("gen_fixture: unknown fixture '" + name + "'");
}

}  // namespace lincent
