#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lincent/feasibility.hpp"
#include "lincent/generators.hpp"
#include "lincent/matrix.hpp"
#include "lincent/rational.hpp"
#include "lincent/represent.hpp"
#include "support.hpp"

using namespace lincent;
using namespace testsup;

TEST_CASE("rational text round trips") {
  CHECK(parse_rational("3/4") == rat(3, 4));
  CHECK(parse_rational("-3/4") == rat(-3, 4));
  CHECK(parse_rational("7") == rat(7));
  CHECK(parse_rational("  -12  ") == rat(-12));
  CHECK(parse_rational("0.25") == rat(1, 4));
  CHECK(parse_rational("-0.125") == rat(-1, 8));
  CHECK(parse_rational("1.5") == rat(3, 2));
  CHECK(parse_rational("2.") == rat(2));
  CHECK(parse_rational(".5") == rat(1, 2));
  CHECK(parse_rational("6/4") == rat(3, 2));  // reduced

  CHECK(rational_str(rat(3, 4)) == "3/4");
  CHECK(rational_str(rat(-3, 4)) == "-3/4");
  CHECK(rational_str(rat(7)) == "7");
  CHECK(rational_str(rat(0)) == "0");

  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(rat(1, 0), std::invalid_argument);
}

TEST_CASE("floor, ceil, integrality") {
  CHECK(rational_floor(rat(7, 2)) == 3);
  CHECK(rational_floor(rat(-7, 2)) == -4);
  CHECK(rational_floor(rat(4)) == 4);
  CHECK(rational_ceil(rat(7, 2)) == 4);
  CHECK(rational_ceil(rat(-7, 2)) == -3);
  CHECK(rational_ceil(rat(-4)) == -4);
  CHECK(is_integer(rat(8, 4)));
  CHECK(!is_integer(rat(1, 3)));
}

TEST_CASE("rank on known matrices") {
  CHECK(rank(mat_from_counts(distance_count_matrix(gen_triangular(5)))) == 5);
  CHECK(rank(RationalMatrix(3, 3)) == 0);
  CHECK(rank(mat_from_counts(distance_count_matrix(gen_fixture("rigid3").g))) == 2);
}

TEST_CASE("rank invariances") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    RationalMatrix m = rand_matrix(rng, rand_range(rng, 1, 5), rand_range(rng, 1, 5));
    std::size_t r = rank(m);

    RationalMatrix swapped = m;
    std::size_t i = rand_below(rng, m.rows), j = rand_below(rng, m.rows);
    for (std::size_t c = 0; c < m.cols; ++c) std::swap(swapped.at(i, c), swapped.at(j, c));
    CHECK(rank(swapped) == r);

    RationalMatrix scaled = m;
    Rational lambda = rand_rational(rng, 1, 5);
    for (std::size_t c = 0; c < m.cols; ++c) scaled.at(i, c) *= lambda;
    CHECK(rank(scaled) == r);
  }
}

TEST_CASE("solve_linear examples") {
  RationalMatrix id(3, 3);
  for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
  std::vector<Rational> v = rv({"5", "-1/2", "7"});
  auto sol = solve_linear(id, v);
  REQUIRE(sol.has_value());
  CHECK(*sol == v);

  RationalMatrix tri = mat_from_counts(distance_count_matrix(gen_triangular(4)));
  std::vector<Rational> target = rv({"1", "2", "3", "4"});
  auto a = solve_linear(tri, target);
  REQUIRE(a.has_value());
  CHECK(mat_vec(tri, *a) == target);

  RationalMatrix rigid = mat_from_counts(distance_count_matrix(gen_fixture("rigid3").g));
  CHECK(!solve_linear(rigid, rv({"0", "1", "2"})).has_value());
}

TEST_CASE("solve_linear solves whatever is consistent") {
  Rng rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = rand_range(rng, 1, 5), cols = rand_range(rng, 1, 5);
    RationalMatrix m = rand_matrix(rng, rows, cols);
    std::vector<Rational> a(cols);
    for (auto& c : a) c = rand_rational(rng, -4, 4);
    std::vector<Rational> v = mat_vec(m, a);
    auto back = solve_linear(m, v);
    REQUIRE(back.has_value());
    CHECK(mat_vec(m, *back) == v);
  }
}

TEST_CASE("strict feasibility on tiny systems") {
  FeasibilityResult one = strict_feasibility(mat_from({{rat(1)}}));
  CHECK(one.feasible);
  REQUIRE(one.witness.size() == 1);
  CHECK(one.witness[0] < 0);

  FeasibilityResult opposite = strict_feasibility(mat_from({{rat(1)}, {rat(-1)}}));
  CHECK(!opposite.feasible);
  CHECK(opposite.certificate == rv({"1", "1"}));

  // A zero row can never go strictly negative.
  FeasibilityResult zero_row = strict_feasibility(mat_from({{rat(0), rat(0)}, {rat(1), rat(2)}}));
  CHECK(!zero_row.feasible);

  // No rows: every x qualifies.
  RationalMatrix empty(0, 3);
  FeasibilityResult trivial = strict_feasibility(empty);
  CHECK(trivial.feasible);
  CHECK(trivial.witness.size() == 3);
}

TEST_CASE("verify_result truth table") {
  RationalMatrix one = mat_from({{rat(1)}});
  FeasibilityResult w;
  w.feasible = true;
  w.witness = {rat(-1)};
  CHECK(verify_result(one, w));
  w.witness = {rat(1)};
  CHECK(!verify_result(one, w));

  FeasibilityResult c;
  c.feasible = false;
  c.certificate = {rat(1)};
  CHECK(!verify_result(one, c));  // transpose(A) y = 1 != 0
  RationalMatrix opposite = mat_from({{rat(1)}, {rat(-1)}});
  c.certificate = {rat(1), rat(1)};
  CHECK(verify_result(opposite, c));
  c.certificate = {rat(0), rat(0)};
  CHECK(!verify_result(opposite, c));  // y must be nonzero
  c.certificate = {rat(-1), rat(-1)};
  CHECK(!verify_result(opposite, c));  // y must be nonnegative
}

TEST_CASE("ranking the hub cycle top-down is infeasible") {
  // Ranks 0 > 1 > 2 > 3 on the 4-node hub cycle admit no coefficients: the
  // difference system built from the count matrix has a certificate.
  Graph g = gen_hub_cycle(4);
  FarkasSystem fs = build_farkas(distance_count_matrix(g), {0, 1, 2, 3});
  FeasibilityResult r = strict_feasibility(fs.a);
  CHECK(!r.feasible);
  CHECK(verify_result(fs.a, r));
  // Brute force over a coarse rational grid agrees that nothing works.
  const Rational grid[5] = {rat(-1), rat(-1, 2), rat(0), rat(1, 2), rat(1)};
  bool found = false;
  std::vector<Rational> x(4);
  for (const auto& x1 : grid)
    for (const auto& x2 : grid)
      for (const auto& x3 : grid) {
        x[0] = 0, x[1] = x1, x[2] = x2, x[3] = x3;
        bool ok = true;
        for (std::size_t i = 0; i < fs.a.rows && ok; ++i) {
          Rational dot = 0;
          for (std::size_t j = 0; j < fs.a.cols; ++j) dot += fs.a.at(i, j) * x[j];
          ok = dot < 0;
        }
        found = found || ok;
      }
  CHECK(!found);
}

TEST_CASE("feasibility results always verify and the tags are exclusive") {
  Rng rng(13);
  for (int trial = 0; trial < 1000; ++trial) {
    RationalMatrix m =
        rand_matrix(rng, rand_range(rng, 1, 6), rand_range(rng, 1, 6), -5, 5, 3);
    FeasibilityResult r = strict_feasibility(m);
    CHECK(verify_result(m, r));
    if (r.feasible) {
      CHECK(r.witness.size() == m.cols);
      CHECK(r.certificate.empty());
    } else {
      CHECK(r.certificate.size() == m.rows);
      CHECK(r.witness.empty());
      // Normalized for reproducibility: first nonzero entry is 1.
      for (const auto& y : r.certificate) {
        if (y == 0) continue;
        CHECK(y == 1);
        break;
      }
    }
  }
}

TEST_CASE("two-column verdicts match the ray enumeration oracle") {
  Rng rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    RationalMatrix m =
        rand_matrix(rng, rand_range(rng, 1, 6), rand_range(rng, 1, 2), -4, 4, 3);
    FeasibilityResult r = strict_feasibility(m);
    CHECK(r.feasible == ray_oracle_feasible(m));
  }
}
