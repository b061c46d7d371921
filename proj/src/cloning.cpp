#include "qsep/cloning.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qsep {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// dim^power, failing once the cap is exceeded.
std::size_t checked_power(std::size_t dim, int power, const std::string& what) {
  std::size_t acc = 1;
  for (int i = 0; i < power; ++i) {
    require(acc <= kDimensionCap / dim,
            what + ": ambient dimension exceeds the cap of " + std::to_string(kDimensionCap) +
                "; use the Gram representation instead");
    acc *= dim;
  }
  return acc;
}

ComplexVector tensor_power(const ComplexVector& v, int power) {
  ComplexVector acc = v;
  for (int i = 1; i < power; ++i) acc = tensor_product(acc, v);
  return acc;
}

}  // namespace

CloningTask make_cloning_task(const StatePair& base, int m, int n,
                              std::optional<PureState> blank) {
  require(m >= 1, "make_cloning_task: m must be at least 1");
  require(n >= m, "make_cloning_task: n must be at least m");
  if (blank.has_value() && n > m) {
    const std::size_t want = checked_power(base.plus.dim(), n - m, "make_cloning_task");
    require(blank->dim() == want,
            "make_cloning_task: blank dimension must be base_dim^(n - m)");
  }
  return CloningTask{base, m, n, std::move(blank)};
}

double duan_guo_bound(double alpha_mag) {
  require(alpha_mag >= 0.0 && alpha_mag < 1.0, "duan_guo_bound: alpha_mag out of [0, 1)");
  return 1.0 / (1.0 + alpha_mag);
}

double mn_cloning_bound(double alpha_mag, int m, int n) {
  require(alpha_mag >= 0.0 && alpha_mag < 1.0, "mn_cloning_bound: alpha_mag out of [0, 1)");
  require(m >= 1, "mn_cloning_bound: m must be at least 1");
  require(n >= m, "mn_cloning_bound: n must be at least m");
  if (n == m) return 1.0;
  return (1.0 - std::pow(alpha_mag, m)) / (1.0 - std::pow(alpha_mag, n));
}

SeparationTask as_separation_task(const CloningTask& task, TaskRepresentation mode) {
  require(task.m >= 1 && task.n >= task.m, "as_separation_task: invalid copy counts");
  const StatePair base = canonicalize(task.base);
  const double a = std::abs(base.overlap);
  require(a < 1.0 - kParallelTol, "as_separation_task: base states are (near-)identical");

  if (mode == TaskRepresentation::gram) {
    return make_task(std::pow(a, task.m), std::pow(a, task.n));
  }

  checked_power(base.plus.dim(), task.n, "as_separation_task");
  const ComplexVector blank =
      task.blank.has_value()
          ? task.blank->vec()
          : ComplexVector::basis(checked_power(base.plus.dim(), task.n - task.m,
                                               "as_separation_task"),
                                 0);

  const auto build_initial = [&](const PureState& s) {
    ComplexVector v = tensor_power(s.vec(), task.m);
    if (task.n > task.m) v = tensor_product(v, blank);
    return PureState(v);
  };
  const StatePair initial = make_pair(build_initial(base.plus), build_initial(base.minus));
  const StatePair target = make_pair(PureState(tensor_power(base.plus.vec(), task.n)),
                                     PureState(tensor_power(base.minus.vec(), task.n)));
  return make_task(initial, target);
}

double idp_limit_gap(double alpha_mag, int n) {
  require(alpha_mag >= 0.0 && alpha_mag < 1.0, "idp_limit_gap: alpha_mag out of [0, 1)");
  require(n >= 1, "idp_limit_gap: n must be at least 1");
  const double an = std::pow(alpha_mag, n);
  // Equals mn_cloning_bound(a, 1, n) - idp_bound(a); the product form keeps
  // full relative precision when the gap is tiny.
  return (1.0 - alpha_mag) * an / (1.0 - an);
}

double compound_consistency_residual(double alpha_mag, int m, int n) {
  require(alpha_mag >= 0.0 && alpha_mag < 1.0,
          "compound_consistency_residual: alpha_mag out of [0, 1)");
  require(m >= 1 && n >= m, "compound_consistency_residual: invalid copy counts");
  const double p_m_inf = 1.0 - std::pow(alpha_mag, m);
  const double p_n_inf = 1.0 - std::pow(alpha_mag, n);
  return p_m_inf - mn_cloning_bound(alpha_mag, m, n) * p_n_inf;
}

}  // namespace qsep
