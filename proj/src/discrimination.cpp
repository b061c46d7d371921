#include "qsep/discrimination.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qsep/separation.hpp"

namespace qsep {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

double idp_bound(double alpha_mag) {
  require(alpha_mag >= 0.0 && alpha_mag <= 1.0, "idp_bound: alpha_mag out of [0, 1]");
  return 1.0 - alpha_mag;
}

double helstrom_bound(double alpha_mag) {
  require(alpha_mag >= 0.0 && alpha_mag <= 1.0, "helstrom_bound: alpha_mag out of [0, 1]");
  return 0.5 * (1.0 + std::sqrt((1.0 - alpha_mag) * (1.0 + alpha_mag)));
}

HelstromMeasurement build_helstrom_measurement(const StatePair& pair) {
  require(std::abs(pair.overlap) < 1.0 - kParallelTol,
          "build_helstrom_measurement: identical states cannot be discriminated");
  const SpanBasis basis = span_basis(pair);
  const auto mc = span_coords(basis, pair.minus.vec());  // plus is (1, 0)
  const ComplexVector plus_c({1.0, 0.0});
  const ComplexVector minus_c({mc[0], mc[1]});
  const ComplexMatrix diff =
      Complex(0.5, 0.0) * (outer_product(plus_c, plus_c) - outer_product(minus_c, minus_c));

  const EigenSystem es = hermitian_eigensystem(diff);
  ComplexMatrix proj_plus = ComplexMatrix::zeros(2, 2);
  for (std::size_t k = 0; k < es.values.size(); ++k) {
    if (es.values[k] > 0.0) proj_plus = proj_plus + outer_product(es.vectors[k], es.vectors[k]);
  }
  const ComplexMatrix proj_minus = ComplexMatrix::identity(2) - proj_plus;
  return HelstromMeasurement{proj_plus, proj_minus, basis};
}

double helstrom_success_probability(const HelstromMeasurement& meas, const StatePair& pair) {
  const auto pc = span_coords(meas.basis, pair.plus.vec());
  const auto mc = span_coords(meas.basis, pair.minus.vec());
  const ComplexVector p({pc[0], pc[1]});
  const ComplexVector m({mc[0], mc[1]});
  const double hit_plus = inner_product(p, meas.proj_plus * p).real();
  const double hit_minus = inner_product(m, meas.proj_minus * m).real();
  return 0.5 * (hit_plus + hit_minus);
}

DiscriminationOutcomeRates interpolated_rates(double alpha_mag, double beta_mag) {
  require(beta_mag >= 0.0 && beta_mag <= alpha_mag && alpha_mag < 1.0,
          "interpolated_rates: requires 0 <= beta_mag <= alpha_mag < 1");
  const double p_s = separation_bound(alpha_mag, beta_mag);
  const double p_h = helstrom_bound(beta_mag);
  return DiscriminationOutcomeRates{p_s * p_h, p_s * (1.0 - p_h), 1.0 - p_s};
}

double error_floor(double p_s, double p_idp) {
  require(p_idp > 0.0 && p_idp <= 1.0, "error_floor: p_idp out of (0, 1]");
  require(p_s <= 1.0, "error_floor: p_s out of range");
  require(p_s >= p_idp,
          "error_floor: p_s below p_idp, no strategy in this family reaches it");
  const double d = p_s - p_idp;
  if (d == 0.0) return 0.0;
  // p_s^2 - d^2, factored to avoid cancellation near the endpoints.
  return 0.5 * (p_s - std::sqrt((p_s - d) * (p_s + d)));
}

}  // namespace qsep
