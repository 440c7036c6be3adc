#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lincent/axioms.hpp"
#include "lincent/centrality.hpp"
#include "lincent/distinguish.hpp"
#include "lincent/generators.hpp"
#include "lincent/graph.hpp"
#include "lincent/represent.hpp"

using json = nlohmann::ordered_json;
namespace lc = lincent;

namespace {

// Exit codes: 0 ok, 1 negative decision under --fail-on-no, 2 bad input.
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

lc::Graph load_graph(const std::string& path, bool undirected) {
  if (path == "-") return lc::parse_edge_list(std::cin, undirected);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open graph file '" + path + "'");
  return lc::parse_edge_list(in, undirected);
}

std::vector<lc::Rational> read_rationals(std::istream& in) {
  std::vector<lc::Rational> v;
  std::string tok;
  while (in >> tok) v.push_back(lc::parse_rational(tok));
  return v;
}

// Names accepted by --coeffs / spec positionals. The op markers dispatch to
// the non-linear centralities; neg-peripherality expands once n is known.
struct CoeffArg {
  enum Kind { Spec, NegPeriph, Prime, Closeness, Lin, LexRank, LexCanonical } kind = Spec;
  lc::CoefficientSpec spec;
};

CoeffArg parse_coeff_arg(const std::string& s) {
  CoeffArg out;
  if (s == "indegree") {
    out.spec = lc::explicit_spec({lc::Rational(0), lc::Rational(1)});
    return out;
  }
  if (s == "harmonic") {
    out.spec = lc::harmonic_spec();
    return out;
  }
  if (s == "neg-peripherality") {
    out.kind = CoeffArg::NegPeriph;
    return out;
  }
  if (s.rfind("power-law:", 0) == 0) {
    out.spec = lc::power_law_spec(lc::parse_rational(s.substr(10)));
    return out;
  }
  if (s.rfind("exp:", 0) == 0) {
    out.spec = lc::exp_decay_spec(lc::parse_rational(s.substr(4)));
    return out;
  }
  if (s == "prime") return {CoeffArg::Prime, {}};
  if (s == "closeness") return {CoeffArg::Closeness, {}};
  if (s == "lin") return {CoeffArg::Lin, {}};
  if (s == "lex-rank") return {CoeffArg::LexRank, {}};
  if (s == "lex-canonical") return {CoeffArg::LexCanonical, {}};
  if (s == "-") {
    out.spec = lc::explicit_spec(read_rationals(std::cin));
    return out;
  }
  std::ifstream in(s);
  if (!in) throw UsageError("cannot open coefficient file '" + s + "'");
  out.spec = lc::explicit_spec(read_rationals(in));
  return out;
}

// Requires a plain coefficient spec (no op markers) for the analytic tools.
lc::CoefficientSpec require_spec(const CoeffArg& arg, const char* who) {
  if (arg.kind == CoeffArg::Spec) return arg.spec;
  if (arg.kind == CoeffArg::NegPeriph)
    throw UsageError(std::string(who) + ": neg-peripherality depends on the graph size; pass an explicit vector");
  throw UsageError(std::string(who) + ": expected a coefficient spec, not a centrality name");
}

std::vector<int> parse_perm(const std::string& s) {
  std::vector<int> pi;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(item, &pos);
      if (pos != item.size() || v < 0) throw std::invalid_argument(item);
      pi.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("bad --perm entry '" + item + "'");
    }
  }
  if (pi.empty()) throw UsageError("--perm must list node ids separated by commas");
  return pi;
}

std::pair<int, int> parse_require(const std::string& s) {
  auto gt = s.find('>');
  if (gt == std::string::npos) throw UsageError("bad --require '" + s + "'; expected u>w");
  try {
    std::size_t p1 = 0, p2 = 0;
    std::string lhs = s.substr(0, gt), rhs = s.substr(gt + 1);
    int u = std::stoi(lhs, &p1);
    int w = std::stoi(rhs, &p2);
    if (p1 != lhs.size() || p2 != rhs.size() || u < 0 || w < 0) throw std::invalid_argument(s);
    return {u, w};
  } catch (const std::exception&) {
    throw UsageError("bad --require '" + s + "'; expected u>w");
  }
}

std::string rs(const lc::Rational& r) { return lc::rational_str(r); }

std::string join_rationals(const std::vector<lc::Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += rs(v[i]);
  }
  return s;
}

json graph_json(const lc::Graph& g) {
  json j;
  j["n"] = g.n;
  json arcs = json::array();
  for (auto [u, v] : lc::arcs_of(g)) arcs.push_back({u, v});
  j["arcs"] = std::move(arcs);
  return j;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw UsageError("cannot open output file '" + out_path + "'");
  out << text;
}

std::string labeled_edge_list(const lc::Graph& g, const std::map<std::string, int>& labels) {
  std::string s;
  for (const auto& [name, node] : labels) s += "# " + name + " = " + std::to_string(node) + "\n";
  return s + lc::write_edge_list(g);
}

long long parse_nat(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size() || v < 0) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("bad ") + what + " '" + s + "'");
  }
}

int run_gen(const std::string& family, const std::vector<std::string>& params, bool as_json,
            const std::string& out_path) {
  lc::Graph g;
  std::map<std::string, int> labels;
  auto need = [&](std::size_t n) {
    if (params.size() != n)
      throw UsageError("gen " + family + " expects " + std::to_string(n) + " parameter(s)");
  };
  if (family == "hub-cycle") {
    need(1);
    g = lc::gen_hub_cycle(static_cast<int>(parse_nat(params[0], "node count")));
  } else if (family == "triangular") {
    need(1);
    g = lc::gen_triangular(static_cast<int>(parse_nat(params[0], "node count")));
  } else if (family == "gprime") {
    need(1);
    g = lc::gen_gprime(static_cast<int>(parse_nat(params[0], "node count")));
  } else if (family == "clique-cycle") {
    need(3);
    bool bridged;
    if (params[2] == "bridged")
      bridged = true;
    else if (params[2] == "disjoint")
      bridged = false;
    else
      throw UsageError("gen clique-cycle: third parameter must be 'bridged' or 'disjoint'");
    lc::LabeledGraph lg = lc::gen_clique_cycle(static_cast<int>(parse_nat(params[0], "clique size")),
                                               static_cast<int>(parse_nat(params[1], "cycle size")),
                                               bridged);
    g = lg.g;
    labels = {{"x", lg.x}, {"y", lg.y}};
  } else if (family == "distinguisher") {
    need(7);
    lc::DistinguisherKind kind;
    if (params[0] == "connected")
      kind = lc::DistinguisherKind::Connected;
    else if (params[0] == "disjoint")
      kind = lc::DistinguisherKind::Disjoint;
    else
      throw UsageError("gen distinguisher: first parameter must be 'connected' or 'disjoint'");
    lc::LabeledGraph lg = lc::gen_distinguisher(
        kind, static_cast<int>(parse_nat(params[1], "h")), static_cast<int>(parse_nat(params[2], "k")),
        parse_nat(params[3], "s"), parse_nat(params[4], "p"), parse_nat(params[5], "q"),
        parse_nat(params[6], "t"));
    g = lg.g;
    labels = {{"x", lg.x}, {"y", lg.y}};
  } else if (family == "fixture") {
    need(1);
    lc::Fixture fx = lc::gen_fixture(params[0]);
    g = fx.g;
    labels = fx.labels;
  } else {
    throw UsageError("unknown family '" + family + "'");
  }
  if (as_json) {
    json j = graph_json(g);
    j["labels"] = json::object();
    for (const auto& [name, node] : labels) j["labels"][name] = node;
    emit(j.dump(2) + "\n", out_path);
  } else {
    emit(labeled_edge_list(g, labels), out_path);
  }
  return 0;
}

int run_matrix(const lc::Graph& g, bool as_json, const std::string& out_path) {
  lc::CountMatrix c = lc::distance_count_matrix(g);
  if (as_json) {
    json j;
    j["n"] = g.n;
    j["matrix"] = c;
    emit(j.dump(2) + "\n", out_path);
    return 0;
  }
  std::string s;
  for (const auto& row : c) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) s += '\t';
      s += std::to_string(row[k]);
    }
    s += '\n';
  }
  emit(s, out_path);
  return 0;
}

std::vector<lc::Rational> scores_for(const CoeffArg& arg, const lc::Graph& g, int cap) {
  switch (arg.kind) {
    case CoeffArg::Spec:
      return lc::linear_centrality(lc::distance_count_matrix(g), lc::materialize(arg.spec, g.n));
    case CoeffArg::NegPeriph:
      return lc::linear_centrality(lc::distance_count_matrix(g), lc::neg_peripherality(g.n));
    case CoeffArg::Prime:
      return lc::prime_product_centrality(lc::distance_count_matrix(g));
    case CoeffArg::Closeness:
      return lc::closeness(g);
    case CoeffArg::Lin:
      return lc::lin_centrality(g);
    case CoeffArg::LexRank:
      return lc::lex_rank_centrality(lc::distance_count_matrix(g));
    case CoeffArg::LexCanonical:
      return lc::lex_canonical_centrality(g, cap);
  }
  throw std::logic_error("unreachable");
}

int run_centrality(const lc::Graph& g, const CoeffArg& arg, bool rank, int cap, bool as_json,
                   const std::string& out_path) {
  std::vector<lc::Rational> v = scores_for(arg, g, cap);
  auto tiers = lc::ranking(v);
  if (as_json) {
    json j;
    j["n"] = g.n;
    json scores = json::array();
    for (const auto& r : v) scores.push_back(rs(r));
    j["scores"] = std::move(scores);
    if (rank) j["ranking"] = tiers;
    emit(j.dump(2) + "\n", out_path);
    return 0;
  }
  std::string s;
  if (rank) {
    for (std::size_t r = 0; r < tiers.size(); ++r) {
      s += std::to_string(r + 1);
      s += '\t';
      for (std::size_t i = 0; i < tiers[r].size(); ++i) {
        if (i) s += ',';
        s += std::to_string(tiers[r][i]);
      }
      s += '\t';
      s += rs(v[tiers[r].front()]);
      s += '\n';
    }
  } else {
    for (int i = 0; i < g.n; ++i) s += std::to_string(i) + "\t" + rs(v[i]) + "\n";
  }
  emit(s, out_path);
  return 0;
}

int run_rigidity(const lc::Graph& g, int cap, bool as_json, const std::string& out_path) {
  bool geo = lc::is_geometrically_rigid(g);
  bool skipped = g.n > cap;
  bool rigid = skipped ? false : lc::is_rigid(g, cap);
  if (as_json) {
    json j;
    j["geometrically_rigid"] = geo;
    if (skipped)
      j["rigid"] = nullptr;
    else
      j["rigid"] = rigid;
    emit(j.dump(2) + "\n", out_path);
    return 0;
  }
  std::string s = std::string("geometrically_rigid\t") + (geo ? "true" : "false") + "\n";
  if (skipped)
    s += "rigid\tskipped\tnode count exceeds cap " + std::to_string(cap) + "\n";
  else
    s += std::string("rigid\t") + (rigid ? "true" : "false") + "\n";
  emit(s, out_path);
  return 0;
}

int emit_decision(const lc::Representability& r, bool fail_on_no, bool as_json,
                  const std::string& out_path) {
  if (as_json) {
    json j;
    j["representable"] = r.representable;
    json vec = json::array();
    for (const auto& q : r.representable ? r.witness : r.certificate) vec.push_back(rs(q));
    j[r.representable ? "witness" : "certificate"] = std::move(vec);
    emit(j.dump(2) + "\n", out_path);
  } else {
    std::string s = r.representable ? "YES\n" : "NO\n";
    s += join_rationals(r.representable ? r.witness : r.certificate) + "\n";
    emit(s, out_path);
  }
  return (!r.representable && fail_on_no) ? kExitNo : 0;
}

int run_representativeness(const lc::Graph& g, int cap, const std::string& check, bool as_json,
                           const std::string& out_path) {
  lc::Representativeness rep = lc::representativeness(g, cap);
  json j;
  std::string s;
  s += "count\t" + rep.count.str() + "\n";
  s += "total\t" + rep.total.str() + "\n";
  s += "ratio\t" + rs(rep.ratio) + "\n";
  j["count"] = rep.count.str();
  j["total"] = rep.total.str();
  j["ratio"] = rs(rep.ratio);
  if (!check.empty()) {
    bool (*pred)(const std::vector<int>&) = nullptr;
    if (check == "thm5")
      pred = lc::hub_cycle_representable;
    else if (check == "pn")
      pred = lc::gprime_representable;
    else
      throw UsageError("--check must be 'thm5' or 'pn'");
    lc::CountMatrix c = lc::distance_count_matrix(g);
    std::vector<int> pi(g.n);
    for (int i = 0; i < g.n; ++i) pi[i] = i;
    lc::BigInt agreed = 0, total = 0;
    std::vector<std::string> mismatches;
    do {
      bool lp = lc::is_representable(c, pi).representable;
      bool closed = pred(pi);
      ++total;
      if (lp == closed) {
        ++agreed;
      } else if (mismatches.size() < 10) {
        std::string perm;
        for (std::size_t i = 0; i < pi.size(); ++i)
          perm += (i ? "," : "") + std::to_string(pi[i]);
        mismatches.push_back(perm);
      }
    } while (std::next_permutation(pi.begin(), pi.end()));
    s += "check\t" + check + "\tagreement\t" + agreed.str() + "/" + total.str() + "\n";
    for (const auto& m : mismatches) s += "mismatch\t" + m + "\n";
    j["check"] = {{"name", check},
                  {"agreement", agreed.str() + "/" + total.str()},
                  {"mismatches", mismatches}};
  }
  emit(as_json ? j.dump(2) + "\n" : s, out_path);
  return 0;
}

const char* classification_name(lc::PairClassification::Tag tag) {
  switch (tag) {
    case lc::PairClassification::Proportional:
      return "proportional";
    case lc::PairClassification::CaseA:
      return "CaseA";
    case lc::PairClassification::CaseB:
      return "CaseB";
    case lc::PairClassification::CaseC:
      return "CaseC";
  }
  return "?";
}

const char* plan_kind_name(lc::DistinguisherPlan::Kind kind) {
  switch (kind) {
    case lc::DistinguisherPlan::Connected:
      return "connected";
    case lc::DistinguisherPlan::Disjoint:
      return "disjoint";
    case lc::DistinguisherPlan::TwoPaths:
      return "two-paths";
    case lc::DistinguisherPlan::SinglePath:
      return "single-path";
  }
  return "?";
}

int run_distinguish(const lc::CoefficientSpec& spec_a, const lc::CoefficientSpec& spec_b, int len,
                    bool fail_on_no, bool as_json, const std::string& out_path) {
  auto expand = [&](const lc::CoefficientSpec& s) {
    return s.tag == lc::CoeffTag::Explicit ? s.coeffs : lc::materialize(s, len);
  };
  std::vector<lc::Rational> a = expand(spec_a), b = expand(spec_b);
  lc::DistinguishResult res = lc::construct(a, b);
  json j;
  std::string s;
  s += std::string("classification\t") + classification_name(res.cls.tag) + "\n";
  j["classification"] = classification_name(res.cls.tag);
  if (res.cls.tag != lc::PairClassification::CaseA) {
    s += "lambda\t" + rs(res.cls.lambda) + "\n";
    j["lambda"] = rs(res.cls.lambda);
  }
  if (res.cls.tag == lc::PairClassification::Proportional) {
    emit(as_json ? j.dump(2) + "\n" : s, out_path.empty() ? "" : out_path);
    return fail_on_no ? kExitNo : 0;
  }
  const lc::DistinguisherPlan& plan = *res.plan;
  auto add = [&](const std::string& key, const std::string& val) {
    s += key + "\t" + val + "\n";
    j[key] = val;
  };
  if (res.cls.h) add("h", std::to_string(res.cls.h));
  if (res.cls.k) add("k", std::to_string(res.cls.k));
  if (res.cls.tag == lc::PairClassification::CaseC)
    add("inequality", res.cls.inequality_holds ? "true" : "false");
  add("kind", plan_kind_name(plan.kind));
  if (plan.kind == lc::DistinguisherPlan::Connected ||
      plan.kind == lc::DistinguisherPlan::Disjoint) {
    add("s", std::to_string(plan.s));
    add("p", std::to_string(plan.p));
    add("q", std::to_string(plan.q));
    add("t", std::to_string(plan.t));
  }
  add("swap", plan.swapped ? "true" : "false");
  add("x", std::to_string(plan.x));
  add("y", std::to_string(plan.y));
  lc::CountMatrix c = lc::distance_count_matrix(res.g);
  std::vector<lc::Rational> fa = lc::linear_centrality(c, a);
  std::vector<lc::Rational> fb = lc::linear_centrality(c, b);
  s += "fa\t" + rs(fa[plan.x]) + "\t" + rs(fa[plan.y]) + "\n";
  s += "fb\t" + rs(fb[plan.x]) + "\t" + rs(fb[plan.y]) + "\n";
  j["fa"] = {rs(fa[plan.x]), rs(fa[plan.y])};
  j["fb"] = {rs(fb[plan.x]), rs(fb[plan.y])};
  bool agree = lc::agree(fa, fb);
  s += std::string("agree\t") + (agree ? "true" : "false") + "\n";
  j["agree"] = agree;
  if (as_json) {
    j["graph"] = graph_json(res.g);
    std::cout << j.dump(2) << "\n";
    if (!out_path.empty())
      emit(labeled_edge_list(res.g, {{"x", plan.x}, {"y", plan.y}}), out_path);
    return 0;
  }
  if (out_path.empty()) {
    s += "graph\n" + labeled_edge_list(res.g, {{"x", plan.x}, {"y", plan.y}});
    std::cout << s;
  } else {
    std::cout << s;
    emit(labeled_edge_list(res.g, {{"x", plan.x}, {"y", plan.y}}), out_path);
  }
  return 0;
}

int run_axioms(const lc::CoefficientSpec& spec, bool empirical, int k_max, int p_max,
               long long trials, unsigned long long seed, bool as_json,
               const std::string& out_path) {
  lc::AxiomReport rep = lc::axiom_report(spec);
  json j;
  std::string s;
  auto line = [&](const char* name, const lc::AxiomCheck& c) {
    s += std::string(name) + "\t" + (c.holds ? "true" : "false") + "\t" + c.note + "\n";
    j[name] = {{"holds", c.holds}, {"note", c.note}};
  };
  line("density", rep.density);
  line("size", rep.size);
  line("score_monotone", rep.score_monotone);
  line("rank_monotone_sufficient", rep.rank_monotone_sufficient);
  if (empirical) {
    auto rows = lc::empirical_size_density(spec, k_max, p_max);
    json jrows = json::array();
    for (const auto& r : rows) {
      const char* cmp = r.score_x > r.score_y ? ">" : (r.score_x == r.score_y ? "=" : "<");
      s += "gadget\t" + std::to_string(r.k) + "\t" + std::to_string(r.p) + "\t" +
           (r.bridged ? "bridged" : "disjoint") + "\t" + rs(r.score_x) + "\t" + rs(r.score_y) +
           "\t" + cmp + "\n";
      jrows.push_back({{"k", r.k},
                       {"p", r.p},
                       {"family", r.bridged ? "bridged" : "disjoint"},
                       {"score_x", rs(r.score_x)},
                       {"score_y", rs(r.score_y)},
                       {"cmp", cmp}});
    }
    j["gadgets"] = std::move(jrows);
  }
  if (trials > 0) {
    std::mt19937_64 rng(seed);
    long long increases = 0, rank_ok = 0;
    for (long long t = 0; t < trials; ++t) {
      int n = 2 + static_cast<int>(rng() % 24);
      lc::Graph g;
      std::vector<std::pair<int, int>> missing;
      do {
        g = lc::make_graph(n, {});
        missing.clear();
        for (int u = 0; u < n; ++u)
          for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            if (rng() % 10 < 3)
              lc::add_arc(g, u, v);
            else
              missing.emplace_back(u, v);
          }
      } while (missing.empty());
      auto [x, y] = missing[rng() % missing.size()];
      lc::ArcAddition r = lc::empirical_arc_addition(spec, g, x, y);
      if (r.score_after > r.score_before) ++increases;
      if (r.rank_ok) ++rank_ok;
    }
    s += "trials\t" + std::to_string(trials) + "\tincrease\t" + std::to_string(increases) +
         "\trank_ok\t" + std::to_string(rank_ok) + "\n";
    j["trials"] = {{"count", trials}, {"increase", increases}, {"rank_ok", rank_ok}};
  }
  emit(as_json ? j.dump(2) + "\n" : s, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linear geometric centrality toolkit"};
  app.require_subcommand(1);

  std::string out_path;
  bool as_json = false, undirected = false, fail_on_no = false, rank = false;
  int cap = 8, len = 8;
  unsigned long long seed = 0;
  long long trials = 0;
  std::string graph_path, coeffs, perm, check;
  std::vector<std::string> requires_raw, gen_params, empirical_vals;
  std::string family, spec_a, spec_b;

  auto add_common = [&](CLI::App* cmd, bool graph_input) {
    cmd->add_option("-o,--output", out_path, "write the output (or artifact) to this file");
    cmd->add_flag("--json", as_json, "emit JSON instead of TSV");
    if (graph_input) {
      cmd->add_option("graph", graph_path, "edge-list file, or - for stdin")->required();
      cmd->add_flag("--undirected", undirected, "duplicate every arc in both directions");
    }
  };

  CLI::App* gen = app.add_subcommand("gen", "generate a named graph family");
  gen->add_option("family", family,
                  "hub-cycle | triangular | gprime | clique-cycle | distinguisher | fixture")
      ->required();
  gen->add_option("params", gen_params, "family parameters");
  add_common(gen, false);

  CLI::App* matrix = app.add_subcommand("matrix", "print the distance-count matrix");
  add_common(matrix, true);

  CLI::App* centrality = app.add_subcommand("centrality", "evaluate a centrality");
  add_common(centrality, true);
  centrality->add_option("--coeffs", coeffs,
                         "preset | file | - (also: prime, closeness, lin, lex-rank, lex-canonical)")
      ->required();
  centrality->add_flag("--rank", rank, "print rank tiers instead of scores");
  centrality->add_option("--cap", cap, "exhaustive-search cap (lex-canonical)");

  CLI::App* rigidity = app.add_subcommand("rigidity", "rigidity and geometric rigidity");
  add_common(rigidity, true);
  rigidity->add_option("--cap", cap, "exhaustive-search cap");

  CLI::App* represent = app.add_subcommand("represent", "is a permutation induced by some coefficients?");
  add_common(represent, true);
  represent->add_option("--perm", perm, "rank order: comma-separated node ids, best first")
      ->required();
  represent->add_flag("--fail-on-no", fail_on_no, "exit 1 on a NO answer");

  CLI::App* representativeness =
      app.add_subcommand("representativeness", "count representable permutations");
  add_common(representativeness, true);
  representativeness->add_option("--cap", cap, "exhaustive-search cap");
  representativeness->add_option("--check", check,
                                 "cross-validate against a closed form: thm5 | pn");

  CLI::App* distinguish =
      app.add_subcommand("distinguish", "build a graph separating two coefficient specs");
  distinguish->add_option("spec_a", spec_a, "first coefficient spec")->required();
  distinguish->add_option("spec_b", spec_b, "second coefficient spec")->required();
  distinguish->add_option("--len", len, "materialized length for parametric specs");
  distinguish->add_flag("--fail-on-no", fail_on_no, "exit 1 when the specs are proportional");
  add_common(distinguish, false);

  CLI::App* axioms = app.add_subcommand("axioms", "axiom report for a coefficient spec");
  axioms->add_option("spec", spec_a, "coefficient spec")->required();
  axioms->add_option("--empirical", empirical_vals, "k_max p_max: append gadget tables")
      ->expected(2);
  axioms->add_option("--trials", trials, "random arc-addition trials");
  axioms->add_option("--seed", seed, "random seed for --trials");
  add_common(axioms, false);

  CLI::App* robust = app.add_subcommand("robust", "witness for strict outranking requirements");
  add_common(robust, true);
  robust->add_option("--require", requires_raw, "u>w: u must outrank w (repeatable)")
      ->required();
  robust->add_flag("--fail-on-no", fail_on_no, "exit 1 on a NO answer");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return run_gen(family, gen_params, as_json, out_path);
    if (matrix->parsed())
      return run_matrix(load_graph(graph_path, undirected), as_json, out_path);
    if (centrality->parsed())
      return run_centrality(load_graph(graph_path, undirected), parse_coeff_arg(coeffs), rank, cap,
                            as_json, out_path);
    if (rigidity->parsed())
      return run_rigidity(load_graph(graph_path, undirected), cap, as_json, out_path);
    if (represent->parsed()) {
      lc::Graph g = load_graph(graph_path, undirected);
      return emit_decision(lc::is_representable(g, parse_perm(perm)), fail_on_no, as_json,
                           out_path);
    }
    if (representativeness->parsed())
      return run_representativeness(load_graph(graph_path, undirected), cap, check, as_json,
                                    out_path);
    if (distinguish->parsed())
      return run_distinguish(require_spec(parse_coeff_arg(spec_a), "distinguish"),
                             require_spec(parse_coeff_arg(spec_b), "distinguish"), len, fail_on_no,
                             as_json, out_path);
    if (axioms->parsed()) {
      int k_max = 0, p_max = 0;
      bool empirical = !empirical_vals.empty();
      if (empirical) {
        k_max = static_cast<int>(parse_nat(empirical_vals[0], "k_max"));
        p_max = static_cast<int>(parse_nat(empirical_vals[1], "p_max"));
      }
      return run_axioms(require_spec(parse_coeff_arg(spec_a), "axioms"), empirical, k_max, p_max,
                        trials, seed, as_json, out_path);
    }
    if (robust->parsed()) {
      lc::Graph g = load_graph(graph_path, undirected);
      std::vector<std::pair<int, int>> req;
      for (const auto& r : requires_raw) req.push_back(parse_require(r));
      return emit_decision(lc::robust_outranking(g, req), fail_on_no, as_json, out_path);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
