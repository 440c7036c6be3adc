#include "lincent/centrality.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lincent {

CoefficientSpec explicit_spec(std::vector<Rational> coeffs) {
  CoefficientSpec s;
  s.tag = CoeffTag::Explicit;
  s.coeffs = std::move(coeffs);
  return s;
}

CoefficientSpec harmonic_spec() {
  CoefficientSpec s;
  s.tag = CoeffTag::Harmonic;
  return s;
}

CoefficientSpec power_law_spec(const Rational& gamma) {
  if (!(gamma > 0)) throw std::invalid_argument("power_law_spec: gamma must be > 0");
  CoefficientSpec s;
  s.tag = CoeffTag::PowerLaw;
  s.gamma = gamma;
  return s;
}

CoefficientSpec exp_decay_spec(const Rational& delta) {
  if (!(delta > 0 && delta < 1))
    throw std::invalid_argument("exp_decay_spec: delta must be in (0,1)");
  CoefficientSpec s;
  s.tag = CoeffTag::ExpDecay;
  s.delta = delta;
  return s;
}

Rational coeff_at(const std::vector<Rational>& a, std::size_t k) {
  return k < a.size() ? a[k] : Rational(0);
}

std::vector<Rational> materialize(const CoefficientSpec& spec, int n) {
  if (n < 0) throw std::invalid_argument("materialize: negative length");
  std::vector<Rational> a(n, Rational(0));
  switch (spec.tag) {
    case CoeffTag::Explicit:
      for (int i = 0; i < n && i < static_cast<int>(spec.coeffs.size()); ++i)
        a[i] = spec.coeffs[i];
      break;
    case CoeffTag::Harmonic:
      for (int i = 1; i < n; ++i) a[i] = Rational(1, i);
      break;
    case CoeffTag::PowerLaw: {
      if (!is_integer(spec.gamma))
        throw std::domain_error("materialize: power law is exact only for integer gamma");
      unsigned long e = numerator(spec.gamma).convert_to<unsigned long>();
      for (int i = 1; i < n; ++i) {
        BigInt p = boost::multiprecision::pow(BigInt(i), e);
        a[i] = Rational(BigInt(1), p);
      }
      break;
    }
    case CoeffTag::ExpDecay: {
      Rational p = 1;
      for (int i = 1; i < n; ++i) {
        p *= spec.delta;
        a[i] = p;
      }
      break;
    }
  }
  return a;
}

std::vector<Rational> neg_peripherality(int n) {
  std::vector<Rational> a(std::max(n, 0));
  for (int i = 0; i < n; ++i) a[i] = -Rational(i);
  return a;
}

std::vector<Rational> linear_centrality(const CountMatrix& c, const std::vector<Rational>& a) {
  std::vector<Rational> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    Rational acc = 0;
    for (std::size_t k = 0; k < c[i].size(); ++k)
      if (c[i][k] != 0) acc += Rational(c[i][k]) * coeff_at(a, k);
    out[i] = acc;
  }
  return out;
}

namespace {

// Per node: (number of nodes that reach it, sum of their distances).
std::vector<std::pair<long long, long long>> reach_stats(const Graph& g) {
  CountMatrix c = distance_count_matrix(g);
  std::vector<std::pair<long long, long long>> st(g.n);
  for (int i = 0; i < g.n; ++i) {
    long long r = 0, d = 0;
    for (std::size_t k = 0; k < c[i].size(); ++k) {
      r += c[i][k];
      d += static_cast<long long>(k) * c[i][k];
    }
    st[i] = {r, d};
  }
  return st;
}

}  // namespace

std::vector<Rational> closeness(const Graph& g) {
  auto st = reach_stats(g);
  std::vector<Rational> out(g.n);
  for (int i = 0; i < g.n; ++i) out[i] = st[i].second == 0 ? Rational(0) : Rational(1, st[i].second);
  return out;
}

std::vector<Rational> lin_centrality(const Graph& g) {
  auto st = reach_stats(g);
  std::vector<Rational> out(g.n);
  for (int i = 0; i < g.n; ++i)
    out[i] = st[i].second == 0 ? Rational(1)
                               : Rational(BigInt(st[i].first) * st[i].first, BigInt(st[i].second));
  return out;
}

std::vector<Rational> prime_product_centrality(const CountMatrix& c) {
  const std::size_t n = c.size();
  std::vector<unsigned> primes;
  for (unsigned v = 2; primes.size() < n; ++v) {
    bool prime = true;
    for (unsigned d = 2; d * d <= v; ++d)
      if (v % d == 0) {
        prime = false;
        break;
      }
    if (prime) primes.push_back(v);
  }
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt v = 1;
    for (std::size_t k = 0; k < c[i].size(); ++k)
      if (c[i][k] > 0)
        v *= boost::multiprecision::pow(BigInt(primes[k]), static_cast<unsigned>(c[i][k]));
    out[i] = Rational(v);
  }
  return out;
}

std::vector<Rational> lex_rank_centrality(const CountMatrix& c) {
  std::vector<Rational> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    long long below = 0;
    for (std::size_t j = 0; j < c.size(); ++j)
      if (std::lexicographical_compare(c[j].begin(), c[j].end(), c[i].begin(), c[i].end()))
        ++below;
    out[i] = Rational(below);
  }
  return out;
}

std::vector<Rational> lex_canonical_centrality(const Graph& g, int cap) {
  if (g.n > cap) throw std::invalid_argument("lex_canonical_centrality: node count exceeds cap");
  const int n = g.n;
  std::vector<int> sigma(n), best(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  best = sigma;
  auto cell = [&](const std::vector<int>& s, int idx) {
    return has_arc(g, s[idx / n], s[idx % n]) ? 1 : 0;
  };
  do {
    for (int idx = 0; idx < n * n; ++idx) {
      int a = cell(sigma, idx), b = cell(best, idx);
      if (a != b) {
        if (a < b) best = sigma;
        break;
      }
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  std::vector<Rational> out(n);
  for (int pos = 0; pos < n; ++pos) out[best[pos]] = Rational(pos);
  return out;
}

std::vector<std::vector<int>> ranking(const std::vector<Rational>& v) {
  std::vector<int> ids(v.size());
  std::iota(ids.begin(), ids.end(), 0);
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    if (v[a] != v[b]) return v[a] > v[b];
    return a < b;
  });
  std::vector<std::vector<int>> tiers;
  for (int id : ids) {
    if (tiers.empty() || v[tiers.back().front()] != v[id]) tiers.push_back({});
    tiers.back().push_back(id);
  }
  return tiers;
}

bool respects(const std::vector<Rational>& v, const std::vector<int>& pi) {
  if (pi.size() != v.size()) throw std::invalid_argument("respects: length mismatch");
  std::vector<char> seen(v.size(), 0);
  for (int node : pi) {
    if (node < 0 || node >= static_cast<int>(v.size()) || seen[node])
      throw std::invalid_argument("respects: pi is not a permutation");
    seen[node] = 1;
  }
  for (std::size_t i = 0; i + 1 < pi.size(); ++i)
    if (v[pi[i]] < v[pi[i + 1]]) return false;
  return true;
}

bool agree(const std::vector<Rational>& v1, const std::vector<Rational>& v2) {
  if (v1.size() != v2.size()) throw std::invalid_argument("agree: length mismatch");
  return ranking(v1) == ranking(v2);
}

}  // namespace lincent
