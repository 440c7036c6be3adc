#pragma once

#include <map>
#include <string>

#include "lincent/graph.hpp"

namespace lincent {

// Directed cycle 0->1->...->n-1->0 rerouted through a hub: every node also
// points at node 0 and node 0 also points at n-1. Strongly connected,
// full-rank distance-count matrix. n >= 4.
Graph gen_hub_cycle(int n);

// Path 0->1->...->n-1 where every node from 2 on also points back at node 1.
// Distance-count matrix is lower triangular with nonzero diagonal. n >= 3.
Graph gen_triangular(int n);

// Variant of the hub cycle whose tail is folded: the chain stops at n-4,
// which forks to n-3 and (via n-1 <-> n-2) into a 2-cycle; every node still
// points at 0. Strongly connected. n >= 5.
Graph gen_gprime(int n);

struct LabeledGraph {
  Graph g;
  int x = 0;
  int y = 0;
};

// Undirected k-clique (x = node 0) plus directed p-cycle (y = node k);
// `bridged` joins x and y by arcs in both directions. k, p >= 3.
LabeledGraph gen_clique_cycle(int k, int p, bool bridged);

enum class DistinguisherKind { Connected, Disjoint };

// Undirected gadgets whose two marked nodes x, y have distance profiles that
// differ only at indices h, h+1, k-1, k (Connected; needs 1 <= h <= k-2) or
// only at h, k (Disjoint; needs 1 <= h < k).
//
// Connected: backbone path x..u..f..g..v..y where u,f,g,v sit at distances
// h-1, h, k-2, k-1 from x, with s,p,q,t pendant leaves on u,f,g,v.
// Score gap: f(x) - f(y) = (a_h - a_k)(s - t) + (a_{h+1} - a_{k-1})(p - q).
//
// Disjoint: two path components of length k-1. First: x at one end, u at
// distance h-1, s leaves on u, p leaves on the far end. Second mirrors it
// with t and q. Score gap: f(x) - f(y) = a_h (s - t) + a_k (p - q).
LabeledGraph gen_distinguisher(DistinguisherKind kind, int h, int k, long long s,
                               long long p, long long q, long long t);

struct Fixture {
  Graph g;
  std::map<std::string, int> labels;
};

// Named inputs used across the test surface:
//   "lin-counterexample": 24-node undirected forest (two paths, two spiders;
//     labels u, v, x, y) on which the two classical distance centralities
//     order u,v and x,y in opposite ways.
//   "rigid3": 3-node digraph with a trivial automorphism group but two equal
//     distance-count rows.
Fixture gen_fixture(const std::string& name);

}  // namespace lincent
