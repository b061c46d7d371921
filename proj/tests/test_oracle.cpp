#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qsep/oracle.hpp"
#include "qsep/separation.hpp"
#include "test_util.hpp"

using namespace qsep;
using qsep::test::near;

TEST_CASE("feasibility predicate examples") {
  // The zero-error optimum saturates the inequality.
  CHECK(oracle::feasible(0.5, 0.5, 0.0, 0.5, 0.0));
  // Certain success on both branches is impossible for non-orthogonal inputs.
  CHECK_FALSE(oracle::feasible(1.0, 1.0, 0.0, 0.5, 0.0));
  // The optimum of the 0.8 -> 0.4 task: both sides equal 4/9.
  CHECK(oracle::feasible(1.0 / 3.0, 1.0 / 3.0, 0.0, 0.8, 0.4));
  // Slightly above it the inequality breaks.
  CHECK_FALSE(oracle::feasible(0.35, 0.35, 0.0, 0.8, 0.4));
}

TEST_CASE("maximize certifies the zero-error bound") {
  const oracle::OracleResult res = oracle::maximize(0.5, 0.0);
  CHECK(res.best_p_s >= 0.499);
  CHECK(res.best_p_s <= 0.5 + 1e-9);
  CHECK(oracle::feasible(res.best_p_plus, res.best_p_minus, res.best_phase, 0.5, 0.0));
  CHECK(res.feasible_count > 0);
  CHECK(res.evaluations >= res.feasible_count);
}

TEST_CASE("maximize finds the identity map for equal overlaps") {
  const oracle::OracleResult res = oracle::maximize(0.7, 0.7);
  CHECK(res.best_p_s >= 0.999);
  CHECK(res.best_p_s <= 1.0 + 1e-9);
}

TEST_CASE("maximize certifies a proper separation bound") {
  const oracle::OracleResult res = oracle::maximize(0.8, 0.4);
  CHECK(res.best_p_s >= 1.0 / 3.0 - 1e-3);
  CHECK(res.best_p_s <= 1.0 / 3.0 + 1e-9);
}

TEST_CASE("no feasible point beats the closed form on a small lattice") {
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j <= i; ++j) {
      const double alpha = 0.9 * i / 5;
      const double beta = 0.9 * j / 5;
      const oracle::OracleResult res = oracle::maximize(alpha, beta);
      const double bound = separation_bound(alpha, beta);
      CHECK(res.best_p_s <= bound + 1e-9);
      CHECK(res.best_p_s >= bound - 1e-3);
      CHECK(res.guard_interior_best <= res.guard_extremal_best + 1e-9);
    }
  }
}

TEST_CASE("refined grid closes in on the bound") {
  oracle::OracleConfig config;
  config.grid_points = 2000;
  const oracle::OracleResult res = oracle::maximize(0.5, 0.0, config);
  CHECK(res.best_p_s >= 0.5 - 1e-5);
  CHECK(res.best_p_s <= 0.5 + 1e-9);
}

TEST_CASE("incumbent sits on the symmetric ridge with aligned phase") {
  oracle::OracleConfig config;
  for (const auto& [alpha, beta] : {std::pair{0.8, 0.4}, std::pair{0.6, 0.3}}) {
    const oracle::OracleResult res = oracle::maximize(alpha, beta, config);
    const double step = 1.0 / (config.grid_points - 1);
    CHECK(std::abs(res.best_p_plus - res.best_p_minus) <= 2.0 * step);
    const double phase_step = 2.0 * std::numbers::pi / config.phase_points;
    const double wrapped = std::min(res.best_phase, 2.0 * std::numbers::pi - res.best_phase);
    CHECK(wrapped <= phase_step + 1e-12);
  }
}

TEST_CASE("maximize is deterministic") {
  const oracle::OracleResult a = oracle::maximize(0.6, 0.2);
  const oracle::OracleResult b = oracle::maximize(0.6, 0.2);
  CHECK(a.best_p_s == b.best_p_s);
  CHECK(a.best_p_plus == b.best_p_plus);
  CHECK(a.best_p_minus == b.best_p_minus);
  CHECK(a.best_phase == b.best_phase);
  CHECK(a.feasible_count == b.feasible_count);
  CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("configuration and domain validation") {
  oracle::OracleConfig bad;
  bad.grid_points = 8;
  CHECK_THROWS_AS(oracle::maximize(0.5, 0.0, bad), std::invalid_argument);
  bad = {};
  bad.refine_rounds = -1;
  CHECK_THROWS_AS(oracle::maximize(0.5, 0.0, bad), std::invalid_argument);
  bad = {};
  bad.phase_points = 4;
  CHECK_THROWS_AS(oracle::maximize(0.5, 0.0, bad), std::invalid_argument);
  CHECK_THROWS_AS(oracle::maximize(0.4, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(oracle::maximize(1.0, 0.5), std::invalid_argument);
}
