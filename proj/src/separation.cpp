#include "qsep/separation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qsep {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Input-span coordinates of the two initial states for a canonical task:
// plus = (1, 0), minus = (alpha, sqrt(1 - alpha^2)).
std::array<ComplexVector, 2> initial_coords(double alpha) {
  const double s1 = std::sqrt(1.0 - alpha * alpha);
  return {ComplexVector({1.0, 0.0}), ComplexVector({alpha, s1})};
}

}  // namespace

double separation_bound(double alpha_mag, double beta_mag) {
  require(alpha_mag >= 0.0 && alpha_mag <= 1.0, "separation_bound: alpha_mag out of [0, 1]");
  require(beta_mag >= 0.0 && beta_mag <= 1.0, "separation_bound: beta_mag out of [0, 1]");
  require(!(alpha_mag == 1.0 && beta_mag == 1.0),
          "separation_bound: degenerate pair of identical states");
  if (beta_mag >= alpha_mag) return 1.0;
  return (1.0 - alpha_mag) / (1.0 - beta_mag);
}

std::array<double, 3> compose_bounds(double alpha_mag, double beta_mag, double gamma_mag) {
  require(alpha_mag >= beta_mag && beta_mag >= gamma_mag && gamma_mag >= 0.0,
          "compose_bounds: requires alpha_mag >= beta_mag >= gamma_mag >= 0");
  require(alpha_mag < 1.0, "compose_bounds: alpha_mag must be below 1");
  return {separation_bound(alpha_mag, beta_mag), separation_bound(beta_mag, gamma_mag),
          separation_bound(alpha_mag, gamma_mag)};
}

SeparationTask make_task(const StatePair& initial, const StatePair& target) {
  require(std::abs(initial.overlap) < 1.0 - kParallelTol,
          "make_task: initial states are (near-)identical");
  require(std::abs(target.overlap) < 1.0 - kParallelTol,
          "make_task: target states are (near-)identical");
  const StatePair ci = canonicalize(initial);
  const StatePair ct = canonicalize(target);
  const double a = std::abs(ci.overlap);
  const double b = std::abs(ct.overlap);
  return SeparationTask{ci, ct, Complex(a, 0.0), Complex(b, 0.0), b > a};
}

SeparationTask make_task(double alpha_mag, double beta_mag) {
  require(alpha_mag >= 0.0 && alpha_mag < 1.0 - kParallelTol,
          "make_task: alpha_mag out of [0, 1)");
  require(beta_mag >= 0.0 && beta_mag < 1.0 - kParallelTol, "make_task: beta_mag out of [0, 1)");
  const auto pair_for = [](double ov) {
    std::vector<Complex> m = {ov, std::sqrt(1.0 - ov * ov)};
    return make_pair(PureState(ComplexVector::basis(2, 0)), PureState(ComplexVector(std::move(m))));
  };
  return make_task(pair_for(alpha_mag), pair_for(beta_mag));
}

TwoOutcomeOperation build_optimal_operation(const SeparationTask& task) {
  return build_optimal_operation(task, ComplexMatrix::identity(2));
}

TwoOutcomeOperation build_optimal_operation(const SeparationTask& task,
                                            const ComplexMatrix& failure_unitary) {
  require(!task.overlap_increasing,
          "build_optimal_operation: requires |beta| <= |alpha|; overlap-increasing tasks "
          "have no bound-attaining construction");
  const double alpha = task.alpha.real();
  const double beta = task.beta.real();
  require(alpha < 1.0 - kParallelTol, "build_optimal_operation: initial states identical");
  require(failure_unitary.rows() == 2 && failure_unitary.cols() == 2 &&
              max_abs(adjoint(failure_unitary) * failure_unitary - ComplexMatrix::identity(2)) <=
                  kConstructionTol,
          "build_optimal_operation: failure_unitary must be a 2x2 unitary");

  const double s1 = std::sqrt(1.0 - alpha * alpha);
  const double s2 = std::sqrt(1.0 - beta * beta);
  const double p = separation_bound(alpha, beta);
  const double root_p = std::sqrt(p);

  // Success operator in span coordinates: sends (1,0) -> sqrt(p)(1,0) and
  // (alpha, s1) -> sqrt(p)(beta, s2).
  const ComplexMatrix a_s(2, 2,
                          {root_p, root_p * (beta - alpha) / s1, 0.0, root_p * s2 / s1});
  const ComplexMatrix a_f =
      failure_unitary * psd_sqrt(ComplexMatrix::identity(2) - adjoint(a_s) * a_s);

  const auto psi = initial_coords(alpha);
  const Complex nu_plus(norm(a_f * psi[0]), 0.0);
  const Complex nu_minus(norm(a_f * psi[1]), 0.0);

  return TwoOutcomeOperation{a_s,
                             a_f,
                             Complex(root_p, 0.0),
                             Complex(root_p, 0.0),
                             nu_plus,
                             nu_minus,
                             alpha,
                             beta,
                             span_basis(task.initial),
                             span_basis(task.target)};
}

TwoOutcomeOperation scale_success(const TwoOutcomeOperation& op, double factor) {
  require(factor >= 0.0, "scale_success: factor must be non-negative");
  const ComplexMatrix a_s = Complex(factor, 0.0) * op.a_s;
  // Throws if the scaled success branch is infeasible (Gram eigenvalue > 1).
  const ComplexMatrix a_f = psd_sqrt(ComplexMatrix::identity(2) - adjoint(a_s) * a_s);
  const auto psi = initial_coords(op.alpha);
  TwoOutcomeOperation out = op;
  out.a_s = a_s;
  out.a_f = a_f;
  out.mu_plus = factor * op.mu_plus;
  out.mu_minus = factor * op.mu_minus;
  out.nu_plus = Complex(norm(a_f * psi[0]), 0.0);
  out.nu_minus = Complex(norm(a_f * psi[1]), 0.0);
  return out;
}

double completeness_residual(const TwoOutcomeOperation& op) {
  return max_abs(adjoint(op.a_s) * op.a_s + adjoint(op.a_f) * op.a_f -
                 ComplexMatrix::identity(2));
}

OperationDiagnostics diagnose(const TwoOutcomeOperation& op, const SeparationTask& task) {
  require(std::abs(op.alpha - task.alpha.real()) <= kDerivedTol &&
              std::abs(op.beta - task.beta.real()) <= kDerivedTol,
          "diagnose: operation does not belong to this task");

  OperationDiagnostics d{};
  d.p_s_plus = std::norm(op.mu_plus);
  d.p_s_minus = std::norm(op.mu_minus);
  d.p_s = 0.5 * (d.p_s_plus + d.p_s_minus);
  d.q = std::conj(op.mu_plus) * op.mu_minus;
  d.theta = std::arg(d.q);

  const EigenSystem es = hermitian_eigensystem(adjoint(op.a_s) * op.a_s);
  d.max_eig = es.values.front();
  if (d.max_eig >= 1.0 - kDensityTol) d.witness = es.vectors.front();
  return d;
}

double feasibility_residual(double p_plus, double p_minus, const Complex& q,
                            const Complex& alpha, const Complex& beta) {
  const double lhs = (1.0 - p_plus) * (1.0 - p_minus);
  const double rhs = std::norm(alpha - q * beta);
  return std::max(0.0, rhs - lhs);
}

double feasibility_residual(const TwoOutcomeOperation& op) {
  return feasibility_residual(std::norm(op.mu_plus), std::norm(op.mu_minus),
                              std::conj(op.mu_plus) * op.mu_minus, Complex(op.alpha, 0.0),
                              Complex(op.beta, 0.0));
}

FailureAnalysis failure_states(const TwoOutcomeOperation& op, const SeparationTask& task) {
  require(std::abs(op.alpha - task.alpha.real()) <= kDerivedTol,
          "failure_states: operation does not belong to this task");
  const auto psi = initial_coords(op.alpha);
  const ComplexVector f_plus = op.a_f * psi[0];
  const ComplexVector f_minus = op.a_f * psi[1];
  const double w_plus = std::norm(f_plus[0]) + std::norm(f_plus[1]);
  const double w_minus = std::norm(f_minus[0]) + std::norm(f_minus[1]);
  require(w_plus >= kBranchProbFloor && w_minus >= kBranchProbFloor,
          "failure_states: a branch fails with probability ~0, no conditional state exists");
  const ComplexMatrix rho_plus = Complex(1.0 / w_plus, 0.0) * outer_product(f_plus, f_plus);
  const ComplexMatrix rho_minus = Complex(1.0 / w_minus, 0.0) * outer_product(f_minus, f_minus);
  return FailureAnalysis{rho_plus, rho_minus, trace_distance(rho_plus, rho_minus)};
}

ComplexMatrix expand_success_operator(const TwoOutcomeOperation& op) {
  const std::size_t rows = op.out_basis.e0.dim();
  const std::size_t cols = op.in_basis.e0.dim();
  const ComplexVector* outs[2] = {&op.out_basis.e0, &op.out_basis.e1};
  const ComplexVector* ins[2] = {&op.in_basis.e0, &op.in_basis.e1};
  std::vector<Complex> e(rows * cols, Complex(0.0));
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      const Complex c = op.a_s.at(i, j);
      if (c == Complex(0.0)) continue;
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t k = 0; k < cols; ++k)
          e[r * cols + k] += c * (*outs[i])[r] * std::conj((*ins[j])[k]);
    }
  }
  return ComplexMatrix(rows, cols, std::move(e));
}

}  // namespace qsep
