#include <doctest.h>

#include <random>
#include <set>

#include "cordlasso/errors.hpp"
#include "cordlasso/strict_lp.hpp"

using namespace cordlasso;

TEST_CASE("open interval") {
  StrictLinearSystem sys;
  const auto x = sys.add_variable(false);
  sys.add_strict({{x, Rational(1)}}, Rational(0));   // x > 0
  sys.add_strict({{x, Rational(-1)}}, Rational(-1)); // x < 1
  const auto p = strict_feasible(sys);
  REQUIRE(p);
  CHECK((*p)[x] > 0);
  CHECK((*p)[x] < 1);
  CHECK(satisfies(sys, *p));
}

TEST_CASE("empty open set") {
  StrictLinearSystem sys;
  const auto x = sys.add_variable(false);
  sys.add_strict({{x, Rational(1)}}, Rational(0));
  sys.add_strict({{x, Rational(-1)}}, Rational(0));
  CHECK_FALSE(strict_feasible(sys));
}

TEST_CASE("touching bounds are not strictly feasible") {
  StrictLinearSystem sys;
  const auto x = sys.add_variable(true);
  const auto y = sys.add_variable(true);
  sys.add_greater(x, y);
  sys.add_equal(x, y);
  CHECK_FALSE(strict_feasible(sys));

  StrictLinearSystem sys2;
  const auto u = sys2.add_variable(true);
  sys2.add_strict({{u, Rational(-1)}}, Rational(0));  // u < 0 with u >= 0
  CHECK_FALSE(strict_feasible(sys2));
}

TEST_CASE("equalities with constants") {
  StrictLinearSystem sys;
  const auto x = sys.add_variable(true);
  const auto y = sys.add_variable(true);
  sys.add_equality({{x, Rational(1)}, {y, Rational(1)}}, Rational(1));
  sys.add_greater(x, y);
  const auto p = strict_feasible(sys);
  REQUIRE(p);
  CHECK(satisfies(sys, *p));
  sys.add_equality({{x, Rational(2)}, {x, Rational(-2)}}, Rational(1));  // 0 == 1
  CHECK_FALSE(strict_feasible(sys));
}

TEST_CASE("free variables may go negative") {
  StrictLinearSystem sys;
  const auto x = sys.add_variable(false);
  sys.add_strict({{x, Rational(-1)}}, Rational(2));  // x < -2
  const auto p = strict_feasible(sys);
  REQUIRE(p);
  CHECK((*p)[x] < -2);
}

TEST_CASE("an empty system is feasible") {
  StrictLinearSystem sys;
  sys.add_variable(true);
  CHECK(strict_feasible(sys));
}

TEST_CASE("bad variable index") {
  StrictLinearSystem sys;
  sys.add_variable(true);
  sys.add_strict({{3, Rational(1)}}, Rational(0));
  CHECK_THROWS_AS(strict_feasible(sys), InputError);
}

TEST_CASE("agreement with a rational grid search") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> coef(-1, 1), rhs(-2, 2), count(1, 4);
  // Grid: every rational in [0, 3] with denominator at most 4.
  std::set<Rational> grid_set;
  for (int d = 1; d <= 4; ++d) {
    for (int k = 0; k <= 3 * d; ++k) {
      Rational q(k, d);
      q.canonicalize();
      grid_set.insert(q);
    }
  }
  const std::vector<Rational> grid(grid_set.begin(), grid_set.end());

  int agree = 0, lp_only = 0;
  for (int trial = 0; trial < 200; ++trial) {
    StrictLinearSystem sys;
    for (int i = 0; i < 3; ++i) sys.add_variable(true);
    for (std::size_t i = 0; i < 3; ++i) sys.add_strict({{i, Rational(-1)}}, Rational(-3));  // x_i < 3
    const int strict_rows = count(rng);
    for (int r = 0; r < strict_rows; ++r) {
      std::vector<LinearTerm> terms;
      for (std::size_t i = 0; i < 3; ++i) terms.push_back({i, Rational(coef(rng))});
      sys.add_strict(terms, Rational(rhs(rng)));
    }
    if (rng() % 3 == 0) {
      std::vector<LinearTerm> terms;
      for (std::size_t i = 0; i < 3; ++i) terms.push_back({i, Rational(coef(rng))});
      sys.add_equality(terms, Rational(rhs(rng)));
    }

    bool grid_hit = false;
    for (const auto& a : grid) {
      for (const auto& b : grid) {
        for (const auto& c : grid) {
          if (satisfies(sys, {a, b, c})) {
            grid_hit = true;
            break;
          }
        }
        if (grid_hit) break;
      }
      if (grid_hit) break;
    }
    const auto p = strict_feasible(sys);
    if (p) CHECK(satisfies(sys, *p));
    if (grid_hit) CHECK(p.has_value());
    if (grid_hit == p.has_value()) {
      ++agree;
    } else {
      ++lp_only;  // the solver found a point finer than the grid; verified above
    }
  }
  MESSAGE("grid agreement " << agree << "/200, solver-only " << lp_only);
  CHECK(agree >= 190);
}
