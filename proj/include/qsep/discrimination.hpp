#pragma once

#include "qsep/states.hpp"

namespace qsep {

/// Largest zero-error identification probability for a pair with overlap
/// magnitude `alpha_mag`: 1 - alpha_mag.
double idp_bound(double alpha_mag);

/// Largest error-permitting identification probability:
/// (1 + sqrt(1 - alpha_mag^2)) / 2.
double helstrom_bound(double alpha_mag);

/// Orthogonal two-outcome measurement on the pair's span. proj_plus collects
/// the positive eigenspace of (rho_plus - rho_minus)/2.
struct HelstromMeasurement {
  ComplexMatrix proj_plus;
  ComplexMatrix proj_minus;
  SpanBasis basis;
};

HelstromMeasurement build_helstrom_measurement(const StatePair& pair);

/// Average probability that the measurement names the preparation correctly;
/// equals helstrom_bound(|overlap|) for the pair it was built from.
double helstrom_success_probability(const HelstromMeasurement& meas, const StatePair& pair);

/// Outcome rates of the separate-then-detect strategy.
struct DiscriminationOutcomeRates {
  double p_d;  // correct identification
  double p_e;  // error
  double p_i;  // inconclusive
};

/// Rates for optimally separating alpha -> beta and then measuring the
/// separated pair with the optimal detector. Requires 0 <= beta <= alpha < 1.
DiscriminationOutcomeRates interpolated_rates(double alpha_mag, double beta_mag);

/// Smallest error probability achievable at success probability p_s within
/// the separate-then-detect family, where p_idp is the zero-error ceiling.
/// Requires p_idp <= p_s <= 1 and 0 < p_idp <= 1.
double error_floor(double p_s, double p_idp);

}  // namespace qsep
