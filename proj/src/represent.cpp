#include "lincent/represent.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lincent {

namespace {

void check_permutation(std::size_t n, const std::vector<int>& pi, const char* who) {
  if (pi.size() != n) throw std::invalid_argument(std::string(who) + ": permutation length mismatch");
  std::vector<char> seen(n, 0);
  for (int v : pi) {
    if (v < 0 || v >= static_cast<int>(n) || seen[v])
      throw std::invalid_argument(std::string(who) + ": not a permutation");
    seen[v] = 1;
  }
}

std::vector<int> inverse_of(const std::vector<int>& pi) {
  std::vector<int> rho(pi.size());
  for (std::size_t r = 0; r < pi.size(); ++r) rho[pi[r]] = static_cast<int>(r);
  return rho;
}

}  // namespace

FarkasSystem build_farkas(const CountMatrix& c, const std::vector<int>& pi) {
  check_permutation(c.size(), pi, "build_farkas");
  const std::size_t n = c.size();
  FarkasSystem sys;
  sys.pi = pi;
  sys.a = RationalMatrix(n == 0 ? 0 : n - 1, n);
  for (std::size_t r = 0; r + 1 < n; ++r)
    for (std::size_t j = 0; j < n; ++j)
      sys.a.at(r, j) = Rational(c[pi[r + 1]][j]) - Rational(c[pi[r]][j]);
  return sys;
}

Representability is_representable(const CountMatrix& c, const std::vector<int>& pi) {
  FarkasSystem sys = build_farkas(c, pi);
  FeasibilityResult fr = strict_feasibility(sys.a);
  Representability out;
  out.representable = fr.feasible;
  out.witness = std::move(fr.witness);
  out.certificate = std::move(fr.certificate);
  return out;
}

Representability is_representable(const Graph& g, const std::vector<int>& pi) {
  return is_representable(distance_count_matrix(g), pi);
}

Representativeness representativeness(const Graph& g, int cap) {
  if (g.n > cap) throw std::invalid_argument("representativeness: node count exceeds cap");
  CountMatrix c = distance_count_matrix(g);
  std::vector<int> pi(g.n);
  std::iota(pi.begin(), pi.end(), 0);
  Representativeness out;
  out.count = 0;
  out.total = 1;
  for (int i = 2; i <= g.n; ++i) out.total *= i;
  do {
    if (is_representable(c, pi).representable) ++out.count;
  } while (std::next_permutation(pi.begin(), pi.end()));
  out.ratio = out.total == 0 ? Rational(0) : Rational(out.count, out.total);
  return out;
}

bool hub_cycle_representable(const std::vector<int>& pi) {
  const int n = static_cast<int>(pi.size());
  if (n < 4) throw std::invalid_argument("hub_cycle_representable: needs n >= 4");
  check_permutation(pi.size(), pi, "hub_cycle_representable");
  std::vector<int> rho = inverse_of(pi);
  return (rho[0] < rho[n - 1] && rho[n - 1] < rho[1]) ||
         (rho[1] < rho[n - 1] && rho[n - 1] < rho[0]);
}

bool gprime_representable(const std::vector<int>& pi) {
  const int n = static_cast<int>(pi.size());
  if (n < 4) throw std::invalid_argument("gprime_representable: needs n >= 4");
  check_permutation(pi.size(), pi, "gprime_representable");
  std::vector<int> rho = inverse_of(pi);
  if (rho[n - 1] >= 2 && rho[n - 1] <= n - 3) return true;
  if (rho[n - 1] == 1 && rho[n - 2] != 0) return true;
  if (rho[n - 1] == n - 2 && rho[n - 2] != n - 1) return true;
  return false;
}

std::optional<std::vector<Rational>> value_interpolation(const Graph& g,
                                                         const std::vector<Rational>& v) {
  if (static_cast<int>(v.size()) != g.n)
    throw std::invalid_argument("value_interpolation: target length mismatch");
  CountMatrix c = distance_count_matrix(g);
  RationalMatrix m(g.n, g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) m.at(i, j) = Rational(c[i][j]);
  return solve_linear(m, v);
}

Representability robust_outranking(const Graph& g,
                                   const std::vector<std::pair<int, int>>& require) {
  CountMatrix c = distance_count_matrix(g);
  RationalMatrix m(require.size(), g.n);
  for (std::size_t r = 0; r < require.size(); ++r) {
    auto [u, w] = require[r];
    if (u < 0 || u >= g.n || w < 0 || w >= g.n)
      throw std::invalid_argument("robust_outranking: node out of range");
    if (u == w) throw std::invalid_argument("robust_outranking: a node cannot outrank itself");
    for (int j = 0; j < g.n; ++j) m.at(r, j) = Rational(c[w][j]) - Rational(c[u][j]);
  }
  FeasibilityResult fr = strict_feasibility(m);
  Representability out;
  out.representable = fr.feasible;
  out.witness = std::move(fr.witness);
  out.certificate = std::move(fr.certificate);
  return out;
}

}  // namespace lincent
