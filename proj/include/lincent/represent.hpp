#pragma once

#include <optional>

#include "lincent/feasibility.hpp"
#include "lincent/graph.hpp"

namespace lincent {

struct FarkasSystem {
  RationalMatrix a;     // (n-1) x n difference rows
  std::vector<int> pi;  // rank order: pi[r] = node holding rank r
};

// Row r = rowC(pi[r+1]) - rowC(pi[r]); a coefficient vector c with a*c < 0
// rowwise makes scores strictly decrease along pi. Column 0 is always zero.
FarkasSystem build_farkas(const CountMatrix& c, const std::vector<int>& pi);

struct Representability {
  bool representable = false;
  std::vector<Rational> witness;      // coefficients inducing pi with no ties
  std::vector<Rational> certificate;  // Farkas proof that none exist
};

Representability is_representable(const CountMatrix& c, const std::vector<int>& pi);
Representability is_representable(const Graph& g, const std::vector<int>& pi);

struct Representativeness {
  BigInt count;  // representable permutations
  BigInt total;  // n!
  Rational ratio;
};

// Decides every permutation; exhaustive, so n above `cap` throws
// std::invalid_argument.
Representativeness representativeness(const Graph& g, int cap = 8);

// Closed-form membership predicates (n >= 4, else std::invalid_argument),
// written on the rank map rho = pi^{-1}.
// Hub-cycle family: representable iff rho(n-1) lies strictly between
// rho(0) and rho(1).
bool hub_cycle_representable(const std::vector<int>& pi);
// Folded-tail family: representable iff 2 <= rho(n-1) <= n-3, or
// rho(n-1) = 1 with rho(n-2) != 0, or rho(n-1) = n-2 with rho(n-2) != n-1.
bool gprime_representable(const std::vector<int>& pi);

// Coefficients reproducing the exact target values v (not just their
// order), or none when v is outside the row space of the count matrix.
std::optional<std::vector<Rational>> value_interpolation(const Graph& g,
                                                         const std::vector<Rational>& v);

// Strict requirements (u, w) = "u must outrank w". Witness coefficients or
// a Farkas certificate over the requirement rows.
Representability robust_outranking(const Graph& g,
                                   const std::vector<std::pair<int, int>>& require);

}  // namespace lincent
