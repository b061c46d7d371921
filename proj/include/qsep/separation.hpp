#pragma once

#include <array>
#include <optional>

#include "qsep/states.hpp"

namespace qsep {

/// Construction-level tolerance (completeness, orthogonality of built
/// operators), one order below the derived-quantity tolerance.
inline constexpr double kConstructionTol = 1e-10;

/// Tolerance for derived equalities (saturation, bound attainment).
inline constexpr double kDerivedTol = 1e-9;

/// Tolerance for density-matrix level checks (failure-state collapse).
inline constexpr double kDensityTol = 1e-8;

/// Branch probabilities below this leave no conditional state to normalize.
inline constexpr double kBranchProbFloor = 1e-12;

/// Largest success probability for transforming a pair with overlap
/// magnitude `alpha_mag` into one with overlap magnitude `beta_mag`.
/// Clamps to 1 when beta_mag >= alpha_mag (no separation needed).
double separation_bound(double alpha_mag, double beta_mag);

/// Bounds for the 1->2, 2->3 and 1->3 legs of a three-pair chain with
/// overlap magnitudes a >= b >= c. The direct leg equals the product of
/// the two stages.
std::array<double, 3> compose_bounds(double alpha_mag, double beta_mag, double gamma_mag);

/// A separation problem: transform the initial pair into the target pair.
/// Both pairs are held in canonical form (real non-negative overlaps).
struct SeparationTask {
  StatePair initial;
  StatePair target;
  Complex alpha;            // initial overlap, real >= 0
  Complex beta;             // target overlap, real >= 0
  bool overlap_increasing;  // |beta| > |alpha|: bound clamps to 1, no construction
};

SeparationTask make_task(const StatePair& initial, const StatePair& target);

/// Canonical two-dimensional task with the given overlap magnitudes.
SeparationTask make_task(double alpha_mag, double beta_mag);

/// Success/failure operator pair on the two-dimensional spans.
/// a_s maps input-span coordinates to output-span coordinates; a_f acts on
/// the input span. mu/nu are the success/failure amplitudes per branch.
struct TwoOutcomeOperation {
  ComplexMatrix a_s;
  ComplexMatrix a_f;
  Complex mu_plus;
  Complex mu_minus;
  Complex nu_plus;
  Complex nu_minus;
  double alpha;  // canonical overlaps the operation was built against
  double beta;
  SpanBasis in_basis;
  SpanBasis out_basis;
};

/// Builds the bound-attaining operation for a proper task (|beta| <= |alpha|).
/// The optional unitary is applied after the canonical failure operator
/// (I - a_s^dag a_s)^(1/2); it affects no probability.
TwoOutcomeOperation build_optimal_operation(const SeparationTask& task);
TwoOutcomeOperation build_optimal_operation(const SeparationTask& task,
                                            const ComplexMatrix& failure_unitary);

/// Shrinks the success branch by `factor` and rebuilds the failure branch so
/// completeness still holds. Useful for studying suboptimal operations.
TwoOutcomeOperation scale_success(const TwoOutcomeOperation& op, double factor);

/// max-norm of a_s^dag a_s + a_f^dag a_f - I.
double completeness_residual(const TwoOutcomeOperation& op);

struct OperationDiagnostics {
  double p_s_plus;
  double p_s_minus;
  double p_s;
  Complex q;     // mu_plus^* mu_minus
  double theta;  // phase of q
  double max_eig;
  std::optional<ComplexVector> witness;  // input-span coords; present iff max_eig ~ 1
};

OperationDiagnostics diagnose(const TwoOutcomeOperation& op, const SeparationTask& task);

/// Violation of the feasibility inequality
///   (1 - p_plus)(1 - p_minus) >= |alpha - q beta|^2.
/// Zero means feasible; the optimal operation saturates it.
double feasibility_residual(double p_plus, double p_minus, const Complex& q,
                            const Complex& alpha, const Complex& beta);
double feasibility_residual(const TwoOutcomeOperation& op);

/// Conditional post-failure density matrices (input-span coords) and their
/// trace distance. Identical states mean a failed attempt erased the
/// preparation bit.
struct FailureAnalysis {
  ComplexMatrix rho_f_plus;
  ComplexMatrix rho_f_minus;
  double distance;
};

FailureAnalysis failure_states(const TwoOutcomeOperation& op, const SeparationTask& task);

/// Ambient-space matrix of the success operator (zero outside the input
/// span). Rows live in the output ambient space, columns in the input one.
ComplexMatrix expand_success_operator(const TwoOutcomeOperation& op);

}  // namespace qsep
