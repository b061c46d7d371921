#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qsep/discrimination.hpp"
#include "qsep/separation.hpp"
#include "test_util.hpp"

using namespace qsep;
using qsep::test::near;

TEST_CASE("zero-error bound") {
  CHECK(idp_bound(0.5) == 0.5);
  CHECK(idp_bound(0.0) == 1.0);
  CHECK(idp_bound(1.0) == 0.0);
  for (int k = 0; k < 20; ++k) {
    const double a = 0.99 * k / 19;
    CHECK(idp_bound(a) == separation_bound(a, 0.0));
  }
  CHECK_THROWS_AS(idp_bound(1.2), std::invalid_argument);
}

TEST_CASE("error-permitting bound") {
  CHECK(helstrom_bound(0.0) == 1.0);
  CHECK(helstrom_bound(1.0) == 0.5);
  CHECK(near(helstrom_bound(0.6), 0.9, 1e-15));
  CHECK(near(helstrom_bound(0.5), 0.5 * (1.0 + std::sqrt(0.75)), 1e-15));
}

TEST_CASE("measurement on an orthogonal pair is a projection onto the states") {
  const StatePair p = angle_pair(std::numbers::pi / 2, 2);
  const HelstromMeasurement meas = build_helstrom_measurement(p);
  CHECK(near(helstrom_success_probability(meas, p), 1.0, 1e-12));
  const auto pc = span_coords(meas.basis, p.plus.vec());
  const ComplexVector plus_c({pc[0], pc[1]});
  CHECK(near(inner_product(plus_c, meas.proj_plus * plus_c).real(), 1.0, 1e-12));
}

TEST_CASE("measurement reaches the bound") {
  const StatePair p6 = angle_pair(std::acos(0.6), 2);
  CHECK(near(helstrom_success_probability(build_helstrom_measurement(p6), p6), 0.9, 1e-10));

  const StatePair p5 = angle_pair(std::numbers::pi / 3, 2);
  CHECK(near(helstrom_success_probability(build_helstrom_measurement(p5), p5),
             0.5 * (1.0 + std::sqrt(0.75)), 1e-10));
  CHECK(near(helstrom_success_probability(build_helstrom_measurement(p5), p5),
             0.9330127018922193, 1e-10));
}

TEST_CASE("measurement projectors resolve the identity") {
  std::mt19937 rng(17);
  for (int it = 0; it < 25; ++it) {
    const StatePair p = qsep::test::random_pair(rng, 4);
    const HelstromMeasurement meas = build_helstrom_measurement(p);
    CHECK(max_abs(meas.proj_plus + meas.proj_minus - ComplexMatrix::identity(2)) <= 1e-10);
    CHECK(max_abs(meas.proj_plus * meas.proj_plus - meas.proj_plus) <= 1e-10);
    CHECK(max_abs(meas.proj_minus * meas.proj_minus - meas.proj_minus) <= 1e-10);
    CHECK(hermiticity_deviation(meas.proj_plus) <= 1e-10);
    CHECK(hermiticity_deviation(meas.proj_minus) <= 1e-10);
    CHECK(near(helstrom_success_probability(meas, p), helstrom_bound(std::abs(p.overlap)),
               1e-10));
  }
}

TEST_CASE("measurement success matches the bound across an overlap grid") {
  for (int k = 0; k < 20; ++k) {
    const double a = 0.95 * k / 19;
    const StatePair p = angle_pair(std::acos(a), 2);
    CHECK(near(helstrom_success_probability(build_helstrom_measurement(p), p),
               helstrom_bound(a), 1e-10));
  }
  const PureState e0(ComplexVector::basis(2, 0));
  CHECK_THROWS_AS(build_helstrom_measurement(make_pair(e0, e0)), std::invalid_argument);
}

TEST_CASE("interpolated rates at the endpoints") {
  const DiscriminationOutcomeRates pure_helstrom = interpolated_rates(0.5, 0.5);
  CHECK(pure_helstrom.p_i == 0.0);
  CHECK(near(pure_helstrom.p_d, 0.9330127018922193, 1e-12));
  CHECK(near(pure_helstrom.p_e, 0.0669872981077807, 1e-12));

  const DiscriminationOutcomeRates pure_idp = interpolated_rates(0.5, 0.0);
  CHECK(pure_idp.p_d == 0.5);
  CHECK(pure_idp.p_e == 0.0);
  CHECK(pure_idp.p_i == 0.5);

  const DiscriminationOutcomeRates mid = interpolated_rates(0.8, 0.4);
  const double ph = 0.5 * (1.0 + std::sqrt(0.84));
  CHECK(near(mid.p_d, (1.0 / 3.0) * ph, 1e-12));
  CHECK(near(mid.p_e, (1.0 / 3.0) * (1.0 - ph), 1e-12));
  CHECK(near(mid.p_i, 2.0 / 3.0, 1e-12));

  CHECK_THROWS_AS(interpolated_rates(0.4, 0.5), std::invalid_argument);
}

TEST_CASE("rates sum to one and respect the error floor") {
  for (int i = 0; i <= 9; ++i) {
    for (int j = 0; j <= i; ++j) {
      const double alpha = 0.1 * i;
      const double beta = 0.1 * j;
      const DiscriminationOutcomeRates r = interpolated_rates(alpha, beta);
      CHECK(near(r.p_d + r.p_e + r.p_i, 1.0, 1e-12));
      CHECK(r.p_d >= 0.0);
      CHECK(r.p_e >= 0.0);
      CHECK(r.p_i >= 0.0);
      if (alpha > 0.0) {
        const double p_s = separation_bound(alpha, beta);
        CHECK(r.p_e >= error_floor(p_s, idp_bound(alpha)) - 1e-10);
      }
    }
  }
}

TEST_CASE("error floor closed form") {
  CHECK(error_floor(0.5, 0.5) == 0.0);
  CHECK(near(error_floor(1.0, 0.5), 0.5 * (1.0 - std::sqrt(0.75)), 1e-12));
  CHECK(near(error_floor(1.0, 0.5), 0.06698729810778065, 1e-12));
  CHECK(near(error_floor(0.75, 0.5), 0.02144660940672627, 1e-12));
  CHECK(near(error_floor(0.75, 0.5), 0.5 * (0.75 - std::sqrt(0.5625 - 0.0625)), 1e-12));
  CHECK_THROWS_AS(error_floor(0.4, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(error_floor(0.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(error_floor(1.1, 0.5), std::invalid_argument);
}

TEST_CASE("error floor endpoints match the limiting measurements") {
  for (int i = 1; i <= 9; ++i) {
    const double alpha = 0.1 * i;
    const double p_idp = idp_bound(alpha);
    CHECK(near(error_floor(1.0, p_idp), 1.0 - helstrom_bound(1.0 - p_idp), 1e-12));
    CHECK(error_floor(p_idp, p_idp) == 0.0);
  }
}

TEST_CASE("error floor is the envelope of the strategy family") {
  // At fixed alpha, sweeping beta traces p_e(p_s); the floor touches it.
  const double alpha = 0.7;
  for (int j = 0; j <= 14; ++j) {
    const double beta = alpha * j / 14;
    const double p_s = separation_bound(alpha, beta);
    const DiscriminationOutcomeRates r = interpolated_rates(alpha, beta);
    CHECK(near(r.p_e, error_floor(p_s, idp_bound(alpha)), 1e-10));
  }
}
