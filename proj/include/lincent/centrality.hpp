#pragma once

#include <vector>

#include "lincent/graph.hpp"
#include "lincent/rational.hpp"

namespace lincent {

enum class CoeffTag { Explicit, Harmonic, PowerLaw, ExpDecay };

// Coefficient vector (a_0, a_1, ...) weighting the count of nodes at each
// distance, either explicit (with an implied zero tail) or a parametric
// family evaluated exactly on demand. Index 0 adds the same constant to
// every node and never affects comparisons.
struct CoefficientSpec {
  CoeffTag tag = CoeffTag::Explicit;
  std::vector<Rational> coeffs;  // Explicit
  Rational gamma;                // PowerLaw: a_0 = 0, a_i = i^-gamma
  Rational delta;                // ExpDecay: a_0 = 0, a_i = delta^i
};

CoefficientSpec explicit_spec(std::vector<Rational> coeffs);
CoefficientSpec harmonic_spec();                        // a_0 = 0, a_i = 1/i
CoefficientSpec power_law_spec(const Rational& gamma);  // requires gamma > 0
CoefficientSpec exp_decay_spec(const Rational& delta);  // requires 0 < delta < 1

// a_k with the zero tail applied.
Rational coeff_at(const std::vector<Rational>& a, std::size_t k);

// First n coefficients. PowerLaw evaluates exactly only for integer gamma;
// other gammas throw std::domain_error.
std::vector<Rational> materialize(const CoefficientSpec& spec, int n);

// (0, -1, -2, ..., -(n-1)): scores equal the negated sum of distances.
std::vector<Rational> neg_peripherality(int n);

// Scores c * a. Coefficients shorter than the row length are zero-extended;
// entries past the last column are inert (no node sits at such a distance).
std::vector<Rational> linear_centrality(const CountMatrix& c, const std::vector<Rational>& a);

// 1 / sum of incoming distances; 0 when nothing else reaches the node.
std::vector<Rational> closeness(const Graph& g);

// |reachers|^2 / sum of incoming distances; 1 when nothing else reaches it.
std::vector<Rational> lin_centrality(const Graph& g);

// Tie-free encodings of the distance-count rows: equal scores iff equal rows.
std::vector<Rational> prime_product_centrality(const CountMatrix& c);
std::vector<Rational> lex_rank_centrality(const CountMatrix& c);

// Score of node x = its position in the first lexicographically minimal
// arrangement of the adjacency matrix (arrangements enumerated in
// lexicographic order). Tie-free by construction; exhaustive, so n above
// `cap` throws std::invalid_argument.
std::vector<Rational> lex_canonical_centrality(const Graph& g, int cap = 8);

// Tiers of node ids, best score first; ids ascending inside a tier.
std::vector<std::vector<int>> ranking(const std::vector<Rational>& v);

// Do the scores weakly decrease along the rank order pi (rank -> node)?
bool respects(const std::vector<Rational>& v, const std::vector<int>& pi);

// Same tiers in the same order.
bool agree(const std::vector<Rational>& v1, const std::vector<Rational>& v2);

}  // namespace lincent
