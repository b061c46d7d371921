#include "qsep/sim.hpp"

#include <cmath>
#include <stdexcept>

#include "qsep/discrimination.hpp"

namespace qsep::sim {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

std::uint64_t splitmix64(std::uint64_t& s) {
  std::uint64_t z = (s += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t mix(std::uint64_t x) {
  std::uint64_t s = x;
  return splitmix64(s);
}

void validate(const SimConfig& config, Pipeline expected_pipeline, const char* what) {
  require(config.trials >= 1, "sim: trials must be at least 1");
  require(config.pipeline == expected_pipeline, what);
}

SimulationReport finalize(long long trials, std::map<std::string, long long> counts,
                          std::map<std::string, double> expected) {
  SimulationReport rep;
  rep.trials = trials;
  rep.counts = std::move(counts);
  rep.expected = std::move(expected);
  const double n = static_cast<double>(trials);
  for (const auto& [label, count] : rep.counts) {
    const double f = count / n;
    rep.frequencies[label] = f;
    const double se = std::max(std::sqrt(f * (1.0 - f) / n), 1.0 / n);
    rep.stderrs[label] = se;
    rep.z_scores[label] = (f - rep.expected.at(label)) / se;
  }
  return rep;
}

// Conditional success probabilities, either from the cached amplitudes or by
// applying the success operator to the span state vectors.
std::array<double, 2> success_probabilities(const TwoOutcomeOperation& op, bool state_vector) {
  if (!state_vector) return {std::norm(op.mu_plus), std::norm(op.mu_minus)};
  const double s1 = std::sqrt(1.0 - op.alpha * op.alpha);
  const ComplexVector out_p = op.a_s * ComplexVector({1.0, 0.0});
  const ComplexVector out_m = op.a_s * ComplexVector({op.alpha, s1});
  const auto n2 = [](const ComplexVector& v) { return std::norm(v[0]) + std::norm(v[1]); };
  return {n2(out_p), n2(out_m)};
}

}  // namespace

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial)
    : state_(mix(seed ^ mix(trial + 0x9E3779B97F4A7C15ull))) {}

double TrialRng::uniform() {
  return (splitmix64(state_) >> 11) * 0x1.0p-53;
}

SimulationReport run_separation(const SeparationTask& task, const TwoOutcomeOperation& op,
                                const SimConfig& config) {
  validate(config, Pipeline::separation_only, "run_separation: config.pipeline mismatch");
  const auto p_succ = success_probabilities(op, config.state_vector_path);

  std::map<std::string, long long> counts{{"success", 0}, {"failure", 0}};
  for (long long t = 0; t < config.trials; ++t) {
    TrialRng rng(config.seed, static_cast<std::uint64_t>(t));
    const bool plus = rng.uniform() < 0.5;
    const bool success = rng.uniform() < (plus ? p_succ[0] : p_succ[1]);
    ++counts[success ? "success" : "failure"];
  }

  const double p_s = diagnose(op, task).p_s;
  return finalize(config.trials, std::move(counts),
                  {{"success", p_s}, {"failure", 1.0 - p_s}});
}

SimulationReport run_discrimination_pipeline(const SeparationTask& task,
                                             const SimConfig& config) {
  validate(config, Pipeline::separation_then_helstrom,
           "run_discrimination_pipeline: config.pipeline mismatch");
  require(!task.overlap_increasing,
          "run_discrimination_pipeline: requires |beta| <= |alpha|");

  const TwoOutcomeOperation op = build_optimal_operation(task);
  const HelstromMeasurement meas = build_helstrom_measurement(task.target);
  const auto p_succ = success_probabilities(op, config.state_vector_path);

  // Probability that the detector reports "plus" for each separated state.
  const double beta = op.beta;
  const double s2 = std::sqrt(1.0 - beta * beta);
  const ComplexVector target_p({1.0, 0.0});
  const ComplexVector target_m({beta, s2});
  const auto click_plus = [&](const ComplexVector& v) {
    return inner_product(v, meas.proj_plus * v).real();
  };
  double click_p, click_m;
  if (config.state_vector_path) {
    const double s1 = std::sqrt(1.0 - op.alpha * op.alpha);
    const ComplexVector out_p = op.a_s * ComplexVector({1.0, 0.0});
    const ComplexVector out_m = op.a_s * ComplexVector({op.alpha, s1});
    click_p = p_succ[0] > 0.0 ? click_plus(Complex(1.0 / std::sqrt(p_succ[0]), 0.0) * out_p) : 0.0;
    click_m = p_succ[1] > 0.0 ? click_plus(Complex(1.0 / std::sqrt(p_succ[1]), 0.0) * out_m) : 0.0;
  } else {
    click_p = click_plus(target_p);
    click_m = click_plus(target_m);
  }

  std::map<std::string, long long> counts{{"correct", 0}, {"error", 0}, {"inconclusive", 0}};
  for (long long t = 0; t < config.trials; ++t) {
    TrialRng rng(config.seed, static_cast<std::uint64_t>(t));
    const bool plus = rng.uniform() < 0.5;
    const bool success = rng.uniform() < (plus ? p_succ[0] : p_succ[1]);
    if (!success) {
      ++counts["inconclusive"];
      continue;
    }
    const bool said_plus = rng.uniform() < (plus ? click_p : click_m);
    ++counts[said_plus == plus ? "correct" : "error"];
  }

  const DiscriminationOutcomeRates rates =
      interpolated_rates(task.alpha.real(), task.beta.real());
  return finalize(config.trials, std::move(counts),
                  {{"correct", rates.p_d}, {"error", rates.p_e}, {"inconclusive", rates.p_i}});
}

SimulationReport run_cloning(const CloningTask& task, const SimConfig& config) {
  validate(config, Pipeline::cloning, "run_cloning: config.pipeline mismatch");
  const SeparationTask sep = as_separation_task(task, TaskRepresentation::gram);
  const TwoOutcomeOperation op = build_optimal_operation(sep);
  const auto p_succ = success_probabilities(op, config.state_vector_path);

  std::map<std::string, long long> counts{{"cloned", 0}, {"failed", 0}};
  for (long long t = 0; t < config.trials; ++t) {
    TrialRng rng(config.seed, static_cast<std::uint64_t>(t));
    const bool plus = rng.uniform() < 0.5;
    const bool success = rng.uniform() < (plus ? p_succ[0] : p_succ[1]);
    ++counts[success ? "cloned" : "failed"];
  }

  const double bound =
      mn_cloning_bound(std::abs(canonicalize(task.base).overlap), task.m, task.n);
  return finalize(config.trials, std::move(counts),
                  {{"cloned", bound}, {"failed", 1.0 - bound}});
}

}  // namespace qsep::sim
