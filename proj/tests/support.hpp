#pragma once

// Shared helpers for the test binaries: deterministic randomness (mt19937_64
// plus modulo draws, so sequences are identical on every platform), random
// graph/coefficient builders, and an independent brute-force feasibility
// oracle for systems with at most two columns.

#include <random>
#include <string>
#include <vector>

#include "lincent/centrality.hpp"
#include "lincent/graph.hpp"
#include "lincent/matrix.hpp"

namespace testsup {

using lincent::BigInt;
using lincent::Rational;

using Rng = std::mt19937_64;

inline long long rand_below(Rng& rng, long long k) {
  return static_cast<long long>(rng() % static_cast<unsigned long long>(k));
}

inline long long rand_range(Rng& rng, long long lo, long long hi) {
  return lo + rand_below(rng, hi - lo + 1);
}

inline Rational rand_rational(Rng& rng, long long lo, long long hi, long long max_den = 4) {
  return Rational(BigInt(rand_range(rng, lo, hi)), BigInt(rand_range(rng, 1, max_den)));
}

// Vector of rationals from strings, for readable fixtures.
inline std::vector<Rational> rv(const std::vector<std::string>& parts) {
  std::vector<Rational> out;
  out.reserve(parts.size());
  for (const auto& p : parts) out.push_back(lincent::parse_rational(p));
  return out;
}

// Random coefficient vector with a_0 = 0 and `support` further entries.
inline std::vector<Rational> rand_coeffs(Rng& rng, int support, long long lo, long long hi,
                                         long long max_den = 4) {
  std::vector<Rational> a(static_cast<std::size_t>(support) + 1);
  for (int i = 1; i <= support; ++i) a[i] = rand_rational(rng, lo, hi, max_den);
  return a;
}

inline lincent::Graph rand_graph(Rng& rng, int n, int percent = 30) {
  lincent::Graph g = lincent::make_graph(n, {});
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && rand_below(rng, 100) < percent) lincent::add_arc(g, u, v);
  return g;
}

// Hamiltonian cycle through a shuffled node order plus random extra arcs.
inline lincent::Graph rand_strongly_connected(Rng& rng, int n, int percent = 20) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rand_below(rng, i + 1)]);
  lincent::Graph g = lincent::make_graph(n, {});
  for (int i = 0; i < n; ++i) lincent::add_arc(g, order[i], order[(i + 1) % n]);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && rand_below(rng, 100) < percent) lincent::add_arc(g, u, v);
  return g;
}

inline lincent::Graph rand_geo_rigid(Rng& rng, int n) {
  for (;;) {
    lincent::Graph g = rand_graph(rng, n, 35);
    if (lincent::is_geometrically_rigid(g)) return g;
  }
}

inline lincent::Graph rand_rigid(Rng& rng, int n) {
  for (;;) {
    lincent::Graph g = rand_graph(rng, n, 35);
    if (lincent::is_rigid(g, 8)) return g;
  }
}

inline lincent::RationalMatrix mat_from(const std::vector<std::vector<Rational>>& rows) {
  lincent::RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

inline lincent::RationalMatrix mat_from_counts(const lincent::CountMatrix& c) {
  lincent::RationalMatrix m(c.size(), c.empty() ? 0 : c[0].size());
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = Rational(c[i][j]);
  return m;
}

inline lincent::RationalMatrix rand_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                                           long long lo = -5, long long hi = 5,
                                           long long max_den = 3) {
  lincent::RationalMatrix m(rows, cols);
  for (auto& cell : m.data) cell = rand_rational(rng, lo, hi, max_den);
  return m;
}

// Independent feasibility oracle for "A x < 0 componentwise" when A has one
// or two columns. Geometry: the feasible set is an open convex cone; if it
// is nonempty it contains one of the candidate directions below. With one
// column the candidates are +1 and -1. With two, the cone's boundary rays
// lie on lines a_i . x = 0, so the candidates are each inward normal -a_i
// (covers the halfplane case) and every signed sum of two boundary-line
// directions p_i = (-a_i2, a_i1) (the bisector chord of an arc bounded by
// two different lines points strictly inside the arc). Soundness is by the
// direct strict check; completeness by the case analysis above.
inline bool ray_oracle_feasible(const lincent::RationalMatrix& a) {
  if (a.rows == 0) return true;
  auto works = [&](const std::vector<Rational>& d) {
    for (std::size_t i = 0; i < a.rows; ++i) {
      Rational dot = 0;
      for (std::size_t j = 0; j < a.cols; ++j) dot += a.at(i, j) * d[j];
      if (!(dot < 0)) return false;
    }
    return true;
  };
  std::vector<std::vector<Rational>> candidates;
  if (a.cols == 1) {
    candidates.push_back({Rational(1)});
    candidates.push_back({Rational(-1)});
  } else if (a.cols == 2) {
    std::vector<std::vector<Rational>> perp;
    for (std::size_t i = 0; i < a.rows; ++i) {
      candidates.push_back({-a.at(i, 0), -a.at(i, 1)});
      perp.push_back({-a.at(i, 1), a.at(i, 0)});
    }
    const Rational sign[2] = {Rational(1), Rational(-1)};
    for (std::size_t i = 0; i < perp.size(); ++i)
      for (std::size_t j = i + 1; j < perp.size(); ++j)
        for (const auto& si : sign)
          for (const auto& sj : sign)
            candidates.push_back(
                {si * perp[i][0] + sj * perp[j][0], si * perp[i][1] + sj * perp[j][1]});
  } else {
    throw std::invalid_argument("ray_oracle_feasible: at most two columns");
  }
  for (const auto& d : candidates)
    if (works(d)) return true;
  return false;
}

}  // namespace testsup
