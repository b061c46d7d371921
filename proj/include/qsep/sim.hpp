#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "qsep/cloning.hpp"
#include "qsep/separation.hpp"

namespace qsep::sim {

enum class Pipeline {
  separation_only,
  separation_then_helstrom,
  cloning,
};

struct SimConfig {
  long long trials = 1;
  std::uint64_t seed = 0;
  Pipeline pipeline = Pipeline::separation_only;
  // Re-derives branch probabilities by applying the operators to state
  // vectors instead of using the cached amplitudes. Cross-check path.
  bool state_vector_path = false;
};

/// Counter-based per-trial random stream: the state is keyed by
/// (seed, trial index), so any execution order reproduces the same draws.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial);

  /// Next uniform double in [0, 1).
  double uniform();

 private:
  std::uint64_t state_;
};

struct SimulationReport {
  long long trials = 0;
  std::map<std::string, long long> counts;
  std::map<std::string, double> frequencies;
  std::map<std::string, double> stderrs;    // binomial, floored at 1/trials
  std::map<std::string, double> expected;   // closed-form prediction
  std::map<std::string, double> z_scores;   // (frequency - expected) / stderr

  bool operator==(const SimulationReport&) const = default;
};

/// Samples preparation and success/failure of the given operation.
/// Outcomes: success, failure.
SimulationReport run_separation(const SeparationTask& task, const TwoOutcomeOperation& op,
                                const SimConfig& config);

/// Optimal separation followed by optimal detection on the target pair.
/// Outcomes: correct, error, inconclusive.
SimulationReport run_discrimination_pipeline(const SeparationTask& task,
                                             const SimConfig& config);

/// Cloning as separation of the Gram-represented task.
/// Outcomes: cloned, failed.
SimulationReport run_cloning(const CloningTask& task, const SimConfig& config);

}  // namespace qsep::sim
