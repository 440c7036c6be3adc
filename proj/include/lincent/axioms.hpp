#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lincent/centrality.hpp"
#include "lincent/graph.hpp"

namespace lincent {

struct AxiomCheck {
  bool holds = false;
  std::string note;
};

struct AxiomReport {
  AxiomCheck density;
  AxiomCheck size;
  AxiomCheck score_monotone;
  AxiomCheck rank_monotone_sufficient;
};

// Discrete difference: (delta a)_0 = 0, (delta a)_i = a_{i+1} - a_i for
// i >= 1, with the zero tail applied; output length = input length.
std::vector<Rational> delta(const std::vector<Rational>& a);
std::vector<Rational> delta2(const std::vector<Rational>& a);

// Clique node beats same-size cycle node on the bridged gadget for every
// k >= 3: a_k > k(a_2 - a_1) + (2a_1 - a_2). Parametric families satisfy it
// outright; explicit vectors are decided exactly by finite checks plus sign
// analysis of the affine right side beyond the support. `horizon` caps only
// how far the justification narrates, never the verdict.
AxiomCheck check_density(const CoefficientSpec& spec, long long horizon = 50);

// A large enough cycle eventually beats a fixed clique on the disjoint
// gadget iff a_1 > 0 and the coefficient series diverges.
AxiomCheck check_size(const CoefficientSpec& spec);

// Adding any arc x->y strictly increases y's score iff the coefficients are
// nonnegative, non-increasing from index 1, and a_1 > a_2. Index 0 is
// comparison-neutral and ignored.
AxiomCheck check_score_monotone(const CoefficientSpec& spec);

// Sufficient condition only: score monotone plus convex second differences
// with (delta^2 a)_1 > 0. Failure must not be read as "not rank monotone".
AxiomCheck check_rank_monotone_sufficient(const CoefficientSpec& spec);

AxiomReport axiom_report(const CoefficientSpec& spec, long long horizon = 50);

struct ScoreCounterexample {
  Graph g;
  int x = 0;
  int y = 0;
  char case_tag = 'a';   // 'a': a_1 <= 0; 'b': first a_i < 0; 'c': first rise
  int index = 0;         // offending coefficient index
  long long leaves = 0;  // pendant-star size
};

// For an explicit vector failing score monotonicity: a graph plus (x, y)
// such that adding arc x->y does not strictly increase y's score. Returns
// none when the spec is score monotone (all parametric families are).
std::optional<ScoreCounterexample> score_counterexample(const CoefficientSpec& spec);

struct SizeDensityRow {
  int k = 0;
  int p = 0;
  bool bridged = false;
  Rational score_x;
  Rational score_y;
};

// Clique-vs-cycle comparisons on the disjoint and bridged gadgets for all
// 3 <= k <= k_max, 3 <= p <= p_max. Closed-form scores are recomputed per
// row and asserted equal to the direct evaluation.
std::vector<SizeDensityRow> empirical_size_density(const CoefficientSpec& spec, int k_max,
                                                   int p_max);

struct ArcAddition {
  Rational score_before;  // y before the new arc
  Rational score_after;   // y after it
  bool rank_ok = false;   // every node previously scoring <= y now scores < y
};

// Requires arc x->y to be absent; throws std::invalid_argument otherwise.
ArcAddition empirical_arc_addition(const CoefficientSpec& spec, const Graph& g, int x, int y);

}  // namespace lincent
