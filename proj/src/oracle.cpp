#include "qsep/oracle.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace qsep::oracle {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kTieEps = 1e-12;

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Best feasible point so far. Ties in the objective prefer the symmetric
// point (matching the equal-conditional-probability optimum), then the
// lexicographically smallest (p_plus, p_minus, phase).
struct Incumbent {
  bool valid = false;
  double p_s = -1.0;
  double p_plus = 0.0;
  double p_minus = 0.0;
  double phase = 0.0;
  double asym = 0.0;

  void offer(double pp, double pm, double ph) {
    const double s = 0.5 * (pp + pm);
    const double df = std::abs(pp - pm);
    bool take = false;
    if (!valid || s > p_s + kTieEps) {
      take = true;
    } else if (s >= p_s - kTieEps) {
      if (df < asym) {
        take = true;
      } else if (df == asym) {
        take = pp < p_plus || (pp == p_plus && (pm < p_minus || (pm == p_minus && ph < phase)));
      }
    }
    if (take) {
      valid = true;
      p_s = s;
      p_plus = pp;
      p_minus = pm;
      phase = ph;
      asym = df;
    }
  }
};

double wrap_phase(double ph) {
  double w = std::fmod(ph, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  return w;
}

}  // namespace

OracleResult maximize(double alpha_mag, double beta_mag, const OracleConfig& config) {
  require(config.grid_points >= 16, "oracle: grid_points must be at least 16");
  require(config.refine_rounds >= 0, "oracle: refine_rounds must be non-negative");
  require(config.phase_points >= 8, "oracle: phase_points must be at least 8");
  require(beta_mag >= 0.0 && beta_mag <= alpha_mag && alpha_mag < 1.0,
          "oracle: requires 0 <= beta_mag <= alpha_mag < 1");

  const int gp = config.grid_points;
  const int pp_count = config.phase_points;
  const double step = 1.0 / (gp - 1);
  const double phase_step = kTwoPi / pp_count;

  long long evaluations = 0;
  long long feasible_count = 0;
  Incumbent best;

  {
    std::vector<double> ps(gp), cos_t(pp_count), sin_t(pp_count), phases(pp_count);
    for (int i = 0; i < gp; ++i) ps[i] = i * step;
    for (int k = 0; k < pp_count; ++k) {
      phases[k] = k * phase_step;
      cos_t[k] = std::cos(phases[k]);
      sin_t[k] = std::sin(phases[k]);
    }
    for (int i = 0; i < gp; ++i) {
      const double a = ps[i];
      const double one_a = 1.0 - a;
      for (int j = 0; j < gp; ++j) {
        const double b = ps[j];
        const double lhs = one_a * (1.0 - b);
        const double q = std::sqrt(a * b);
        for (int k = 0; k < pp_count; ++k) {
          ++evaluations;
          const double re = alpha_mag - q * cos_t[k] * beta_mag;
          const double im = q * sin_t[k] * beta_mag;
          if (lhs >= re * re + im * im - kFeasibilityEps) {
            ++feasible_count;
            best.offer(a, b, phases[k]);
          }
        }
      }
    }
  }

  // Local refinement: each pass tightens the grid around the incumbent by a
  // factor of 8 (three successive halvings), searching the +/- previous-step
  // window at the new resolution.
  double p_step = step;
  double ph_step = phase_step;
  for (int round = 0; round < config.refine_rounds && best.valid; ++round) {
    const double p_sub = p_step / 8.0;
    const double ph_sub = ph_step / 8.0;
    const Incumbent center = best;
    for (int di = -8; di <= 8; ++di) {
      const double a = std::clamp(center.p_plus + di * p_sub, 0.0, 1.0);
      for (int dj = -8; dj <= 8; ++dj) {
        const double b = std::clamp(center.p_minus + dj * p_sub, 0.0, 1.0);
        for (int dk = -8; dk <= 8; ++dk) {
          const double ph = wrap_phase(center.phase + dk * ph_sub);
          ++evaluations;
          if (feasible(a, b, ph, alpha_mag, beta_mag)) best.offer(a, b, ph);
        }
      }
    }
    p_step = p_sub;
    ph_step = ph_sub;
  }

  // Guard sweep: coarse search over correlation magnitudes below the
  // extremal sqrt(p_plus p_minus) slice. Kept separate from the incumbent;
  // its interior optimum is reported so callers can confirm it never beats
  // the extremal slice at equal resolution.
  double guard_extremal = -1.0;
  double guard_interior = -1.0;
  {
    const int pg = 33, phg = 16, qg = 16;
    for (int i = 0; i < pg; ++i) {
      const double a = i / double(pg - 1);
      for (int j = 0; j < pg; ++j) {
        const double b = j / double(pg - 1);
        const double lhs = (1.0 - a) * (1.0 - b);
        const double qmax = std::sqrt(a * b);
        const double s = 0.5 * (a + b);
        for (int k = 0; k < phg; ++k) {
          const double ph = k * (kTwoPi / phg);
          const double c = std::cos(ph), sn = std::sin(ph);
          for (int g = 0; g < qg; ++g) {
            ++evaluations;
            const double q = qmax * (g / double(qg - 1));
            const double re = alpha_mag - q * c * beta_mag;
            const double im = q * sn * beta_mag;
            if (lhs >= re * re + im * im - kFeasibilityEps) {
              if (g == qg - 1) {
                guard_extremal = std::max(guard_extremal, s);
              } else {
                guard_interior = std::max(guard_interior, s);
              }
            }
          }
        }
      }
    }
  }

  return OracleResult{best.p_s,         best.p_plus,    best.p_minus, best.phase,
                      feasible_count,   evaluations,    guard_extremal, guard_interior};
}

}  // namespace qsep::oracle
