#include "lincent/axioms.hpp"

#include <sstream>
#include <stdexcept>

#include "lincent/generators.hpp"

namespace lincent {

std::vector<Rational> delta(const std::vector<Rational>& a) {
  std::vector<Rational> d(a.size(), Rational(0));
  for (std::size_t i = 1; i < a.size(); ++i) d[i] = coeff_at(a, i + 1) - a[i];
  return d;
}

std::vector<Rational> delta2(const std::vector<Rational>& a) { return delta(delta(a)); }

namespace {

std::string rs(const Rational& r) { return rational_str(r); }

}  // namespace

AxiomCheck check_density(const CoefficientSpec& spec, long long horizon) {
  switch (spec.tag) {
    case CoeffTag::Harmonic:
      return {true, "1/k stays above the affine bound k(a_2-a_1)+(2a_1-a_2) for every k >= 3"};
    case CoeffTag::PowerLaw:
      return {true, "power-law decay keeps a_k above the affine bound for every k >= 3"};
    case CoeffTag::ExpDecay:
      return {true, "exponential decay keeps a_k above the affine bound for every k >= 3"};
    case CoeffTag::Explicit:
      break;
  }
  const auto& a = spec.coeffs;
  const Rational d = coeff_at(a, 2) - coeff_at(a, 1);  // slope of the bound
  const Rational c = 2 * coeff_at(a, 1) - coeff_at(a, 2);
  long long scan_max = std::max<long long>(3, static_cast<long long>(a.size()));
  if (d < 0) {
    // Bound turns negative for good at k > c/(-d).
    BigInt kstar = rational_floor(c / -d) + 1;
    scan_max = std::max(scan_max, kstar.convert_to<long long>());
  } else if (d > 0) {
    // Bound turns nonnegative for good at k >= -c/d; a zero tail then fails.
    BigInt kbad = rational_ceil(-c / d);
    scan_max = std::max(scan_max, kbad.convert_to<long long>());
  }
  for (long long k = 3; k <= scan_max; ++k) {
    Rational bound = Rational(k) * d + c;
    if (!(coeff_at(a, k) > bound)) {
      std::ostringstream note;
      note << "fails at k=" << k << ": a_k = " << rs(coeff_at(a, k)) << " <= " << rs(bound);
      return {false, note.str()};
    }
  }
  std::ostringstream note;
  note << "verified for k = 3.." << std::min(scan_max, std::max<long long>(horizon, 3));
  if (d < 0)
    note << "; beyond, the zero tail beats the eventually negative bound";
  else
    note << "; beyond, the bound is constant " << rs(c) << " < 0";
  return {true, note.str()};
}

AxiomCheck check_size(const CoefficientSpec& spec) {
  switch (spec.tag) {
    case CoeffTag::Harmonic:
      return {true, "a_1 = 1 > 0 and the harmonic series diverges"};
    case CoeffTag::PowerLaw:
      if (spec.gamma <= 1)
        return {true, "a_1 = 1 > 0 and sum i^-gamma diverges for gamma <= 1"};
      return {false, "sum i^-gamma converges for gamma > 1"};
    case CoeffTag::ExpDecay:
      return {false, "geometric series converges"};
    case CoeffTag::Explicit:
      return {false, "finite support: the coefficient series converges"};
  }
  return {false, "unreachable"};
}

namespace {

// Proof-ordered reason why an explicit vector fails score monotonicity.
struct MonotoneFailure {
  char case_tag;  // 'a', 'b', 'c' ('c' also covers the a_1 = a_2 boundary)
  int index;
};

std::optional<MonotoneFailure> monotone_failure(const std::vector<Rational>& a) {
  if (coeff_at(a, 1) <= 0) return MonotoneFailure{'a', 1};
  const int len = static_cast<int>(a.size());
  for (int i = 2; i < len; ++i)
    if (a[i] < 0) return MonotoneFailure{'b', i};
  for (int i = 1; i <= len; ++i)
    if (coeff_at(a, i) < coeff_at(a, i + 1)) return MonotoneFailure{'c', i};
  if (coeff_at(a, 1) == coeff_at(a, 2)) return MonotoneFailure{'c', 1};
  return std::nullopt;
}

}  // namespace

AxiomCheck check_score_monotone(const CoefficientSpec& spec) {
  switch (spec.tag) {
    case CoeffTag::Harmonic:
      return {true, "1/i is positive and strictly decreasing; a_1 = 1 > 1/2 = a_2"};
    case CoeffTag::PowerLaw:
      return {true, "i^-gamma is positive and strictly decreasing; a_1 = 1 > a_2"};
    case CoeffTag::ExpDecay:
      return {true, "delta^i is positive and strictly decreasing; a_1 > a_2"};
    case CoeffTag::Explicit:
      break;
  }
  auto fail = monotone_failure(spec.coeffs);
  if (!fail) {
    return {true,
            "nonnegative, non-increasing from index 1, and a_1 > a_2 "
            "(index 0 never affects score changes)"};
  }
  const auto& a = spec.coeffs;
  std::ostringstream note;
  switch (fail->case_tag) {
    case 'a':
      note << "a_1 = " << rs(coeff_at(a, 1)) << " <= 0";
      break;
    case 'b':
      note << "a_" << fail->index << " = " << rs(coeff_at(a, fail->index)) << " < 0";
      break;
    default:
      if (coeff_at(a, fail->index) < coeff_at(a, fail->index + 1))
        note << "a_" << fail->index << " < a_" << fail->index + 1;
      else
        note << "a_1 = a_2 (strict first drop required)";
      break;
  }
  return {false, note.str()};
}

AxiomCheck check_rank_monotone_sufficient(const CoefficientSpec& spec) {
  AxiomCheck sm = check_score_monotone(spec);
  if (!sm.holds) return {false, "score monotonicity fails: " + sm.note};
  switch (spec.tag) {
    case CoeffTag::Harmonic:
      return {true, "second difference 2/(i(i+1)(i+2)) > 0 everywhere"};
    case CoeffTag::PowerLaw:
      return {true, "i^-gamma is strictly convex on the positive integers"};
    case CoeffTag::ExpDecay:
      return {true, "second difference delta^(i-1)(delta-1)^2 > 0 everywhere"};
    case CoeffTag::Explicit:
      break;
  }
  const auto& a = spec.coeffs;
  const long long top = static_cast<long long>(a.size()) + 1;  // two past the support
  for (long long i = 1; i <= top; ++i) {
    Rational dd = coeff_at(a, i + 2) - 2 * coeff_at(a, i + 1) + coeff_at(a, i);
    if (i == 1 && !(dd > 0))
      return {false, "(delta^2 a)_1 = " + rs(dd) + " is not > 0"};
    if (dd < 0) {
      std::ostringstream note;
      note << "(delta^2 a)_" << i << " = " << rs(dd) << " < 0";
      return {false, note.str()};
    }
  }
  return {true, "score monotone, convex second differences, strict at index 1"};
}

AxiomReport axiom_report(const CoefficientSpec& spec, long long horizon) {
  AxiomReport r;
  r.density = check_density(spec, horizon);
  r.size = check_size(spec);
  r.score_monotone = check_score_monotone(spec);
  r.rank_monotone_sufficient = check_rank_monotone_sufficient(spec);
  if (r.rank_monotone_sufficient.holds && !r.score_monotone.holds)
    throw std::logic_error("axiom_report: rank condition without score monotonicity");
  return r;
}

std::optional<ScoreCounterexample> score_counterexample(const CoefficientSpec& spec) {
  if (spec.tag != CoeffTag::Explicit) return std::nullopt;
  auto fail = monotone_failure(spec.coeffs);
  if (!fail) return std::nullopt;
  const auto& a = spec.coeffs;
  ScoreCounterexample out;
  out.case_tag = fail->case_tag;
  out.index = fail->index;
  const int i = fail->index;
  if (fail->case_tag == 'a') {
    // Isolated pair: afterwards y sees only x, worth a_1 <= 0.
    out.g = make_graph(2, {});
    out.y = 0;
    out.x = 1;
  } else if (fail->case_tag == 'b') {
    // Chain x <- z_2 <- ... <- z_{i-1} with k leaves; once x->y lands, the
    // leaves sit at distance i and their negative weight swamps the rest.
    Rational head = 0;
    for (int j = 1; j < i; ++j) head += a[j];
    out.leaves = rational_ceil((head + 1) / -a[i]).convert_to<long long>();
    out.g = make_graph(static_cast<int>(i + out.leaves), {});
    out.y = 0;
    out.x = 1;
    for (int j = 2; j <= i - 1; ++j) add_arc(out.g, j, j - 1);
    for (long long l = 0; l < out.leaves; ++l)
      add_arc(out.g, static_cast<int>(i + l), i - 1);
  } else if (i == 1) {
    // y <- z <- x: the new arc only trades an a_2 for an a_1, which is not
    // an increase when a_1 <= a_2.
    out.g = make_graph(3, {});
    out.y = 0;
    out.x = 2;
    add_arc(out.g, 1, 0);
    add_arc(out.g, 2, 1);
  } else {
    // y <- z <- x <- w_3 <- ... <- w_i with k leaves on w_i: the shortcut
    // promotes the leaves from weight a_{i+1} to a_i, a net loss.
    out.leaves = rational_ceil((coeff_at(a, 1) + 1) / (coeff_at(a, i + 1) - a[i]))
                     .convert_to<long long>();
    out.g = make_graph(static_cast<int>(i + 1 + out.leaves), {});
    out.y = 0;
    out.x = 2;
    add_arc(out.g, 1, 0);
    add_arc(out.g, 2, 1);
    for (int j = 3; j <= i; ++j) add_arc(out.g, j, j - 1);
    for (long long l = 0; l < out.leaves; ++l)
      add_arc(out.g, static_cast<int>(i + 1 + l), i);
  }
  ArcAddition probe = empirical_arc_addition(spec, out.g, out.x, out.y);
  if (probe.score_after > probe.score_before)
    throw std::logic_error("score_counterexample: constructed graph fails to violate");
  return out;
}

std::vector<SizeDensityRow> empirical_size_density(const CoefficientSpec& spec, int k_max,
                                                   int p_max) {
  std::vector<SizeDensityRow> rows;
  for (int k = 3; k <= k_max; ++k) {
    for (int p = 3; p <= p_max; ++p) {
      std::vector<Rational> a = materialize(spec, k + p);
      auto tail_sum = [&](int from, int to) {
        Rational s = 0;
        for (int i = from; i <= to; ++i) s += coeff_at(a, i);
        return s;
      };
      for (bool bridged : {false, true}) {
        LabeledGraph lg = gen_clique_cycle(k, p, bridged);
        auto scores = linear_centrality(distance_count_matrix(lg.g), a);
        Rational fx, fy;
        if (bridged) {
          fx = a[0] + Rational(k) * a[1] + tail_sum(2, p);
          fy = a[0] + 2 * a[1] + Rational(k - 1) * coeff_at(a, 2) + tail_sum(2, p - 1);
        } else {
          fx = a[0] + Rational(k - 1) * a[1];
          fy = tail_sum(0, p - 1);
        }
        if (scores[lg.x] != fx || scores[lg.y] != fy)
          throw std::logic_error("empirical_size_density: closed form disagrees");
        rows.push_back({k, p, bridged, scores[lg.x], scores[lg.y]});
      }
    }
  }
  return rows;
}

ArcAddition empirical_arc_addition(const CoefficientSpec& spec, const Graph& g, int x, int y) {
  if (x == y) throw std::invalid_argument("empirical_arc_addition: x and y must differ");
  if (has_arc(g, x, y)) throw std::invalid_argument("empirical_arc_addition: arc already present");
  std::vector<Rational> a = materialize(spec, g.n);
  std::vector<Rational> before = linear_centrality(distance_count_matrix(g), a);
  Graph g2 = g;
  add_arc(g2, x, y);
  std::vector<Rational> after = linear_centrality(distance_count_matrix(g2), a);
  ArcAddition out;
  out.score_before = before[y];
  out.score_after = after[y];
  out.rank_ok = true;
  for (int w = 0; w < g.n; ++w) {
    if (w == y) continue;
    if (before[w] <= before[y] && !(after[w] < after[y])) {
      out.rank_ok = false;
      break;
    }
  }
  return out;
}

}  // namespace lincent
