#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lincent/rational.hpp"

namespace lincent {

// Dense row-major matrix over exact rationals.
struct RationalMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> data;

  RationalMatrix() = default;
  RationalMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  Rational& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

// m * x; throws std::invalid_argument on dimension mismatch.
std::vector<Rational> mat_vec(const RationalMatrix& m, const std::vector<Rational>& x);

// Rank by exact Gaussian elimination.
std::size_t rank(RationalMatrix m);

// One solution of m * x = v (free variables set to 0), or nullopt when the
// system is inconsistent. Throws std::invalid_argument on dimension mismatch.
std::optional<std::vector<Rational>> solve_linear(const RationalMatrix& m,
                                                  const std::vector<Rational>& v);

}  // namespace lincent
