#pragma once

#include "lincent/matrix.hpp"

namespace lincent {

// Answer to "is there x with a*x < 0 in every row?". Exactly one of
// witness/certificate is populated, selected by `feasible`.
struct FeasibilityResult {
  bool feasible = false;
  std::vector<Rational> witness;      // a * witness < 0 componentwise
  std::vector<Rational> certificate;  // y >= 0, y != 0, transpose(a) * y = 0
};

// Decides strict feasibility by maximizing epsilon subject to
// a*x + epsilon*1 <= 0, -1 <= x <= 1, 0 <= epsilon <= 1 with an exact
// simplex under Bland's rule. epsilon* > 0 yields a witness; epsilon* = 0
// yields a certificate read from the optimal reduced costs of the row
// slacks, rescaled so its first nonzero entry is 1. Every result is
// re-verified before being returned.
FeasibilityResult strict_feasibility(const RationalMatrix& a);

// Re-checks a result against the matrix it came from.
bool verify_result(const RationalMatrix& a, const FeasibilityResult& r);

}  // namespace lincent
