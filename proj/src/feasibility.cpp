#include "lincent/feasibility.hpp"

#include <stdexcept>

namespace lincent {

namespace {

// Dense simplex tableau for: maximize eps subject to
//   sum_j a[i][j]*(xp_j - xm_j) + eps <= 0   (rows 0..m-1, rhs 0)
//   xp_j <= 1, xm_j <= 1, eps <= 1           (rhs 1)
// over xp, xm, eps >= 0. The all-slack basis is feasible.
struct Tableau {
  std::size_t m, n;       // input rows / cols
  std::size_t ns;         // structural vars: 2n + 1
  std::size_t nrows;      // m + 2n + 1
  std::size_t ncols;      // ns + nrows + 1 (last column = rhs)
  std::vector<Rational> cells;
  std::vector<Rational> obj;  // reduced costs, length ns + nrows
  std::vector<std::size_t> basis;

  Rational& at(std::size_t r, std::size_t c) { return cells[r * ncols + c]; }
  Rational& rhs(std::size_t r) { return cells[r * ncols + ncols - 1]; }

  explicit Tableau(const RationalMatrix& a)
      : m(a.rows),
        n(a.cols),
        ns(2 * n + 1),
        nrows(m + 2 * n + 1),
        ncols(ns + nrows + 1),
        cells(nrows * ncols),
        obj(ns + nrows),
        basis(nrows) {
    const std::size_t eps = 2 * n;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        at(i, j) = a.at(i, j);
        at(i, n + j) = -a.at(i, j);
      }
      at(i, eps) = 1;
    }
    for (std::size_t j = 0; j < 2 * n; ++j) {
      at(m + j, j) = 1;
      rhs(m + j) = 1;
    }
    at(m + 2 * n, eps) = 1;
    rhs(m + 2 * n) = 1;
    for (std::size_t r = 0; r < nrows; ++r) {
      at(r, ns + r) = 1;
      basis[r] = ns + r;
    }
    obj[eps] = 1;
  }

  void pivot(std::size_t prow, std::size_t pcol) {
    Rational inv = 1 / at(prow, pcol);
    for (std::size_t c = 0; c < ncols; ++c) at(prow, c) *= inv;
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r == prow || at(r, pcol) == 0) continue;
      Rational f = at(r, pcol);
      for (std::size_t c = 0; c < ncols; ++c) at(r, c) -= f * at(prow, c);
    }
    Rational f = obj[pcol];
    if (f != 0)
      for (std::size_t c = 0; c < ns + nrows; ++c) obj[c] -= f * at(prow, c);
    basis[prow] = pcol;
  }

  void solve() {
    for (;;) {
      std::size_t enter = ns + nrows;
      for (std::size_t c = 0; c < ns + nrows; ++c)
        if (obj[c] > 0) {
          enter = c;
          break;
        }
      if (enter == ns + nrows) return;
      std::size_t leave = nrows;
      Rational best;
      for (std::size_t r = 0; r < nrows; ++r) {
        if (at(r, enter) <= 0) continue;
        Rational ratio = rhs(r) / at(r, enter);
        if (leave == nrows || ratio < best ||
            (ratio == best && basis[r] < basis[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == nrows) throw std::logic_error("strict_feasibility: unbounded tableau");
      pivot(leave, enter);
    }
  }

  Rational value_of(std::size_t var) const {
    for (std::size_t r = 0; r < nrows; ++r)
      if (basis[r] == var) return cells[r * ncols + ncols - 1];
    return Rational(0);
  }
};

}  // namespace

FeasibilityResult strict_feasibility(const RationalMatrix& a) {
  FeasibilityResult res;
  if (a.rows == 0) {
    res.feasible = true;
    res.witness.assign(a.cols, Rational(0));
    return res;
  }

  Tableau t(a);
  t.solve();
  const std::size_t n = a.cols;
  Rational eps = t.value_of(2 * n);

  if (eps > 0) {
    res.feasible = true;
    res.witness.resize(n);
    for (std::size_t j = 0; j < n; ++j) res.witness[j] = t.value_of(j) - t.value_of(n + j);
  } else {
    res.feasible = false;
    res.certificate.resize(a.rows);
    // Dual value of structural row i is the negated reduced cost of its slack.
    for (std::size_t i = 0; i < a.rows; ++i) res.certificate[i] = -t.obj[t.ns + i];
    std::size_t lead = a.rows;
    for (std::size_t i = 0; i < a.rows; ++i)
      if (res.certificate[i] != 0) {
        lead = i;
        break;
      }
    if (lead == a.rows) throw std::logic_error("strict_feasibility: zero certificate");
    Rational scale = 1 / res.certificate[lead];
    for (auto& y : res.certificate) y *= scale;
  }

  if (!verify_result(a, res)) throw std::logic_error("strict_feasibility: result failed verification");
  return res;
}

bool verify_result(const RationalMatrix& a, const FeasibilityResult& r) {
  if (r.feasible) {
    if (r.witness.size() != a.cols) return false;
    for (std::size_t i = 0; i < a.rows; ++i) {
      Rational acc = 0;
      for (std::size_t j = 0; j < a.cols; ++j) acc += a.at(i, j) * r.witness[j];
      if (!(acc < 0)) return false;
    }
    return true;
  }
  if (r.certificate.size() != a.rows) return false;
  bool nonzero = false;
  for (const Rational& y : r.certificate) {
    if (y < 0) return false;
    if (y != 0) nonzero = true;
  }
  if (!nonzero) return false;
  for (std::size_t j = 0; j < a.cols; ++j) {
    Rational acc = 0;
    for (std::size_t i = 0; i < a.rows; ++i) acc += a.at(i, j) * r.certificate[i];
    if (acc != 0) return false;
  }
  return true;
}

}  // namespace lincent
