#pragma once

#include <cmath>
#include <cstdint>

namespace qsep::oracle {

struct OracleConfig {
  int grid_points = 200;   // per-axis resolution of the main sweep
  int refine_rounds = 3;   // local refinement passes around the incumbent
  int phase_points = 64;   // relative-phase resolution
};

struct OracleResult {
  double best_p_s;
  double best_p_plus;
  double best_p_minus;
  double best_phase;
  long long feasible_count;  // feasible points seen in the main sweep
  long long evaluations;     // total predicate evaluations (sweep + refine + guard)
  // Coarse sweep over sub-extremal correlation magnitudes; the interior
  // optimum must not beat the extremal slice.
  double guard_extremal_best;
  double guard_interior_best;
};

/// Feasibility slack absorbed at the boundary.
inline constexpr double kFeasibilityEps = 1e-12;

/// Feasibility of conditional success probabilities (p_plus, p_minus) with
/// the success-amplitude correlation modeled at its extremal magnitude
/// sqrt(p_plus p_minus) and relative phase rel_phase:
///   (1 - p_plus)(1 - p_minus) >= |alpha - Q beta|^2 - eps.
inline bool feasible(double p_plus, double p_minus, double rel_phase, double alpha_mag,
                     double beta_mag) {
  const double q = std::sqrt(p_plus * p_minus);
  const double re = alpha_mag - q * std::cos(rel_phase) * beta_mag;
  const double im = q * std::sin(rel_phase) * beta_mag;
  return (1.0 - p_plus) * (1.0 - p_minus) >= re * re + im * im - kFeasibilityEps;
}

/// Exhaustive grid maximization of (p_plus + p_minus)/2 over the feasible
/// region, followed by local grid refinement around the incumbent.
/// Deterministic; requires 0 <= beta_mag <= alpha_mag < 1.
OracleResult maximize(double alpha_mag, double beta_mag, const OracleConfig& config = {});

}  // namespace qsep::oracle
