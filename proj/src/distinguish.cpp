#include "lincent/distinguish.hpp"

#include <stdexcept>

namespace lincent {

PairClassification classify(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  PairClassification out;
  const std::size_t top = std::max(a.size(), b.size());
  for (std::size_t i = 1; i < top; ++i) {
    bool za = coeff_at(a, i) == 0, zb = coeff_at(b, i) == 0;
    if (za != zb) {
      out.tag = PairClassification::CaseA;
      out.k = static_cast<int>(i);
      return out;
    }
  }
  std::size_t h = 0;
  for (std::size_t i = 1; i < top; ++i)
    if (coeff_at(a, i) != 0) {
      h = i;
      break;
    }
  if (h == 0) {
    out.tag = PairClassification::Proportional;
    out.lambda = 1;
    return out;
  }
  out.h = static_cast<int>(h);
  out.lambda = coeff_at(b, h) / coeff_at(a, h);
  if (out.lambda < 0) {
    out.tag = PairClassification::CaseB;
    return out;
  }
  for (std::size_t i = h + 1; i < top; ++i)
    if (coeff_at(b, i) != out.lambda * coeff_at(a, i)) {
      out.tag = PairClassification::CaseC;
      out.k = static_cast<int>(i);
      out.inequality_holds =
          coeff_at(a, h + 1) != coeff_at(a, i - 1) && h + 1 < i;
      return out;
    }
  out.tag = PairClassification::Proportional;
  return out;
}

AltcCheck lemma_altc_check(const std::vector<Rational>& a, const std::vector<Rational>& b,
                           int h, int k) {
  PairClassification cls = classify(a, b);
  if (cls.tag != PairClassification::CaseC || cls.h != h || cls.k != k)
    throw std::invalid_argument("lemma_altc_check: pair does not classify as CaseC(h,k)");
  AltcCheck out;
  const Rational ah = coeff_at(a, h), ak = coeff_at(a, k);
  const Rational bh = coeff_at(b, h), bk = coeff_at(b, k);
  out.nonzero_ok = ah != 0 && ak != 0 && bh != 0 && bk != 0;
  out.cross_ok = bh * ak != bk * ah;
  Rational lhs = (ah - ak) * (coeff_at(b, h + 1) - coeff_at(b, k - 1));
  Rational rhs = (coeff_at(a, h + 1) - coeff_at(a, k - 1)) * (bh - bk);
  out.inequality_holds = lhs != rhs;
  bool shortcut = coeff_at(a, h + 1) != coeff_at(a, k - 1) && h + 1 < k;
  if (out.inequality_holds != shortcut)
    throw std::logic_error("lemma_altc_check: direct evaluation disagrees with shortcut");
  return out;
}

namespace {

// Bidirectional path on `len + 1` fresh nodes; returns the first node id.
int append_path(Graph& g, int len) {
  int first = g.n;
  g.n += len + 1;
  g.adj.resize(g.n);
  for (int i = 0; i < len; ++i) add_edge(g, first + i, first + i + 1);
  return first;
}

// Integer point on the ray solving m * (X, Y) = (0, -1), scaled by the
// lcm of the denominators.
std::pair<BigInt, BigInt> solve_target(const Rational& m00, const Rational& m01,
                                       const Rational& m10, const Rational& m11) {
  Rational det = m00 * m11 - m01 * m10;
  if (det == 0) throw std::logic_error("construct: singular distinguisher system");
  Rational x = m01 / det;
  Rational y = -m00 / det;
  BigInt scale = boost::multiprecision::lcm(denominator(x), denominator(y));
  return {numerator(x) * (scale / denominator(x)), numerator(y) * (scale / denominator(y))};
}

}  // namespace

DistinguishResult construct(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  DistinguishResult out;
  out.cls = classify(a, b);
  if (out.cls.tag == PairClassification::Proportional) return out;

  DistinguisherPlan plan;
  if (out.cls.tag == PairClassification::CaseA) {
    const int k = out.cls.k;
    plan.kind = DistinguisherPlan::TwoPaths;
    plan.k = k;
    plan.swapped = coeff_at(a, k) != 0;  // the zero belongs to b: swap roles
    const Rational lead = plan.swapped ? coeff_at(a, k) : coeff_at(b, k);
    int short_end = append_path(out.g, k - 1);
    int long_end = append_path(out.g, k);
    plan.x = lead > 0 ? short_end : long_end;
    plan.y = lead > 0 ? long_end : short_end;
  } else if (out.cls.tag == PairClassification::CaseB) {
    const int h = out.cls.h;
    plan.h = h;
    if (h == 1) {
      plan.kind = DistinguisherPlan::TwoPaths;
      plan.k = 1;
      int lone = append_path(out.g, 0);
      int edge_end = append_path(out.g, 1);
      plan.x = coeff_at(a, 1) > 0 ? edge_end : lone;
      plan.y = coeff_at(a, 1) > 0 ? lone : edge_end;
    } else {
      plan.kind = DistinguisherPlan::SinglePath;
      int v0 = append_path(out.g, h);
      plan.x = coeff_at(a, h) > 0 ? v0 : v0 + 1;
      plan.y = coeff_at(a, h) > 0 ? v0 + 1 : v0;
    }
  } else {
    const int h = out.cls.h, k = out.cls.k;
    AltcCheck altc = lemma_altc_check(a, b, h, k);
    if (!altc.nonzero_ok || !altc.cross_ok)
      throw std::logic_error("construct: CaseC hypotheses violated");
    plan.h = h;
    plan.k = k;
    std::pair<BigInt, BigInt> xy =
        altc.inequality_holds
            ? solve_target(coeff_at(a, h) - coeff_at(a, k),
                           coeff_at(a, h + 1) - coeff_at(a, k - 1),
                           coeff_at(b, h) - coeff_at(b, k),
                           coeff_at(b, h + 1) - coeff_at(b, k - 1))
            : solve_target(coeff_at(a, h), coeff_at(a, k), coeff_at(b, h), coeff_at(b, k));
    plan.s = (xy.first > 0 ? xy.first : BigInt(0)).convert_to<long long>();
    plan.t = (xy.first < 0 ? -xy.first : BigInt(0)).convert_to<long long>();
    plan.p = (xy.second > 0 ? xy.second : BigInt(0)).convert_to<long long>();
    plan.q = (xy.second < 0 ? -xy.second : BigInt(0)).convert_to<long long>();
    plan.kind = altc.inequality_holds ? DistinguisherPlan::Connected : DistinguisherPlan::Disjoint;
    LabeledGraph lg = gen_distinguisher(altc.inequality_holds ? DistinguisherKind::Connected
                                                              : DistinguisherKind::Disjoint,
                                        h, k, plan.s, plan.p, plan.q, plan.t);
    out.g = lg.g;
    plan.x = lg.x;
    plan.y = lg.y;
  }

  const auto& first = plan.swapped ? b : a;
  const auto& second = plan.swapped ? a : b;
  if (!verify_disagreement(out.g, plan.x, plan.y, first, second))
    throw std::logic_error("construct: built graph failed verification");
  out.plan = plan;
  return out;
}

bool verify_disagreement(const Graph& g, int x, int y, const std::vector<Rational>& a,
                         const std::vector<Rational>& b) {
  if (x < 0 || x >= g.n || y < 0 || y >= g.n)
    throw std::invalid_argument("verify_disagreement: node out of range");
  CountMatrix c = distance_count_matrix(g);
  std::vector<Rational> fa = linear_centrality(c, a);
  std::vector<Rational> fb = linear_centrality(c, b);
  return fa[x] >= fa[y] && fb[x] < fb[y];
}

}  // namespace lincent
