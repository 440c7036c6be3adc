#pragma once

#include <optional>

#include "lincent/centrality.hpp"
#include "lincent/generators.hpp"

namespace lincent {

// How two coefficient vectors first depart from proportionality. Index 0 is
// ignored throughout (it never affects rankings).
struct PairClassification {
  enum Tag { Proportional, CaseA, CaseB, CaseC } tag = Proportional;
  Rational lambda;                // Proportional: > 0; CaseB: < 0; CaseC: > 0
  int h = 0;                      // first index where both are nonzero (B, C)
  int k = 0;                      // CaseA: misaligned zero; CaseC: first ratio break
  bool inequality_holds = false;  // CaseC refinement, see lemma_altc_check
};

// Priority: any index where exactly one vector is zero -> CaseA (smallest
// such k). Otherwise h = first common nonzero index, lambda = b_h / a_h;
// lambda < 0 -> CaseB; else the first k with b_k != lambda * a_k -> CaseC;
// no such k -> Proportional. Two all-zero vectors are Proportional(1).
PairClassification classify(const std::vector<Rational>& a, const std::vector<Rational>& b);

struct AltcCheck {
  bool nonzero_ok = false;        // a_h, a_k, b_h, b_k all nonzero
  bool cross_ok = false;          // b_h * a_k != b_k * a_h
  bool inequality_holds = false;  // (a_h-a_k)(b_{h+1}-b_{k-1}) != (a_{h+1}-a_{k-1})(b_h-b_k)
};

// Checks the three hypotheses that select between the connected and the
// disjoint distinguisher. inequality_holds is evaluated directly and
// asserted equal to its shortcut form (a_{h+1} != a_{k-1} and h+1 < k).
// Throws std::invalid_argument unless (a, b) classifies as CaseC with
// exactly these h, k.
AltcCheck lemma_altc_check(const std::vector<Rational>& a, const std::vector<Rational>& b,
                           int h, int k);

struct DistinguisherPlan {
  enum Kind { Connected, Disjoint, TwoPaths, SinglePath } kind = TwoPaths;
  int h = 0;
  int k = 0;
  long long s = 0, p = 0, q = 0, t = 0;  // leaf bundles (Connected/Disjoint)
  int x = 0;
  int y = 0;
  bool swapped = false;  // verify with the roles of a and b exchanged
};

struct DistinguishResult {
  PairClassification cls;
  std::optional<DistinguisherPlan> plan;  // nullopt iff proportional
  Graph g;                                // empty iff proportional
};

// Builds a graph with marked nodes on which the two linear centralities
// demonstrably disagree (x at least ties y under one, loses under the
// other), unless the vectors are proportional. CaseA: two bidirectional
// paths of lengths k-1 and k. CaseB: one bidirectional path of length h
// (for h = 1, where the path ends tie, two paths of lengths 0 and 1).
// CaseC: a leaf-count plan solved exactly from the 2x2 score-gap system,
// realized connected when the lemma inequality holds, disjoint otherwise.
// The result is re-verified before being returned.
DistinguishResult construct(const std::vector<Rational>& a, const std::vector<Rational>& b);

// ce_a(x) >= ce_a(y) while ce_b(x) < ce_b(y), evaluated exactly.
bool verify_disagreement(const Graph& g, int x, int y, const std::vector<Rational>& a,
                         const std::vector<Rational>& b);

}  // namespace lincent
