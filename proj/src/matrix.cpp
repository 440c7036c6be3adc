#include "lincent/matrix.hpp"

#include <stdexcept>

namespace lincent {

std::vector<Rational> mat_vec(const RationalMatrix& m, const std::vector<Rational>& x) {
  if (x.size() != m.cols) throw std::invalid_argument("mat_vec: dimension mismatch");
  std::vector<Rational> out(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < m.cols; ++j) acc += m.at(i, j) * x[j];
    out[i] = acc;
  }
  return out;
}

std::size_t rank(RationalMatrix m) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols && r < m.rows; ++col) {
    std::size_t pivot = r;
    while (pivot < m.rows && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != r)
      for (std::size_t j = col; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
    Rational inv = 1 / m.at(r, col);
    for (std::size_t j = col; j < m.cols; ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, col) == 0) continue;
      Rational f = m.at(i, col);
      for (std::size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return r;
}

std::optional<std::vector<Rational>> solve_linear(const RationalMatrix& m,
                                                  const std::vector<Rational>& v) {
  if (v.size() != m.rows) throw std::invalid_argument("solve_linear: dimension mismatch");
  // Gauss-Jordan on [m | v].
  RationalMatrix a(m.rows, m.cols + 1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) a.at(i, j) = m.at(i, j);
    a.at(i, m.cols) = v[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols && r < a.rows; ++col) {
    std::size_t pivot = r;
    while (pivot < a.rows && a.at(pivot, col) == 0) ++pivot;
    if (pivot == a.rows) continue;
    if (pivot != r)
      for (std::size_t j = col; j <= m.cols; ++j) std::swap(a.at(pivot, j), a.at(r, j));
    Rational inv = 1 / a.at(r, col);
    for (std::size_t j = col; j <= m.cols; ++j) a.at(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows; ++i) {
      if (i == r || a.at(i, col) == 0) continue;
      Rational f = a.at(i, col);
      for (std::size_t j = col; j <= m.cols; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < a.rows; ++i)
    if (a.at(i, m.cols) != 0) return std::nullopt;
  std::vector<Rational> x(m.cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = a.at(i, m.cols);
  return x;
}

}  // namespace lincent
