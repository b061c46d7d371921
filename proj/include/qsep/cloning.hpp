#pragma once

#include <optional>

#include "qsep/separation.hpp"
#include "qsep/states.hpp"

namespace qsep {

/// Produce n exact copies of a state drawn from `base`, starting from m
/// copies plus a blank register of n - m subsystems.
struct CloningTask {
  StatePair base;
  int m;
  int n;
  std::optional<PureState> blank;  // defaults to |0...0> when absent
};

CloningTask make_cloning_task(const StatePair& base, int m, int n,
                              std::optional<PureState> blank = std::nullopt);

/// Largest 1 -> 2 exact-cloning probability: 1 / (1 + alpha_mag).
double duan_guo_bound(double alpha_mag);

/// Largest m -> n exact-cloning probability:
/// (1 - alpha_mag^m) / (1 - alpha_mag^n).
double mn_cloning_bound(double alpha_mag, int m, int n);

/// How a cloning task is rendered as a separation task.
enum class TaskRepresentation {
  gram,          // overlaps only: exact powers of alpha, any n
  materialized,  // explicit tensor products, capped ambient dimension
};

SeparationTask as_separation_task(const CloningTask& task,
                                  TaskRepresentation mode = TaskRepresentation::gram);

/// Excess of the 1 -> n cloning bound over the zero-error discrimination
/// bound: (1 - a) a^n / (1 - a^n). Positive and strictly decreasing in n.
double idp_limit_gap(double alpha_mag, int n);

/// Slack in the chain "clone m -> n, then identify the n-copy product":
/// (1 - a^m) - P_mn (1 - a^n). Identically zero -- the chain is tight.
double compound_consistency_residual(double alpha_mag, int m, int n);

}  // namespace qsep
