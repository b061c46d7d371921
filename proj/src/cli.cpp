#include "qsep/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsep/cloning.hpp"
#include "qsep/discrimination.hpp"
#include "qsep/oracle.hpp"
#include "qsep/separation.hpp"
#include "qsep/sim.hpp"

namespace qsep::cli {

namespace {

using nlohmann::json;

std::string to_string_ll(long long v) {
  return std::to_string(v);
}

json value_to_json(const Value& v) {
  if (const auto* i = std::get_if<long long>(&v)) return *i;
  if (const auto* d = std::get_if<double>(&v)) return *d;
  return std::get<std::string>(v);
}

std::string value_to_text(const Value& v) {
  if (const auto* i = std::get_if<long long>(&v)) return to_string_ll(*i);
  if (const auto* d = std::get_if<double>(&v)) return format_number(*d);
  return std::get<std::string>(v);
}

json envelope_to_json(const Envelope& env) {
  json j;
  j["command"] = env.command;
  json inputs = json::object();
  for (const auto& [k, v] : env.inputs) inputs[k] = value_to_json(v);
  j["inputs"] = inputs;
  json results = json::object();
  for (const auto& [k, v] : env.results) results[k] = value_to_json(v);
  j["results"] = results;
  j["version"] = env.version;
  if (env.seed.has_value()) j["seed"] = *env.seed;
  return j;
}

// One table row; columns are fixed per scan mode.
using Row = std::vector<Value>;

void write_table_csv(std::ostream& os, const std::vector<std::string>& columns,
                     const std::vector<Row>& rows) {
  for (std::size_t c = 0; c < columns.size(); ++c) os << (c ? "," : "") << columns[c];
  os << "\n";
  for (const Row& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << value_to_text(row[c]);
    os << "\n";
  }
}

void write_table_json(std::ostream& os, const std::vector<std::string>& columns,
                      const std::vector<Row>& rows) {
  json arr = json::array();
  for (const Row& row : rows) {
    json obj = json::object();
    for (std::size_t c = 0; c < row.size(); ++c) obj[columns[c]] = value_to_json(row[c]);
    arr.push_back(obj);
  }
  os << arr.dump(2) << "\n";
}

std::vector<double> range_values(double lo, double hi, double step) {
  if (step <= 0.0) throw std::invalid_argument("scan: step must be positive");
  std::vector<double> out;
  if (hi < lo) return out;
  const auto count = static_cast<long long>(std::floor((hi - lo) / step + 1e-9)) + 1;
  out.reserve(static_cast<std::size_t>(count));
  for (long long k = 0; k < count; ++k) out.push_back(lo + static_cast<double>(k) * step);
  return out;
}

struct CheckList {
  bool all_ok = true;
  void expect(bool ok) { all_ok = all_ok && ok; }
};

int emit(const Envelope& env, const std::string& format, std::ostream& out, bool checks_ok) {
  if (format == "csv") {
    out << env.to_csv_string();
  } else {
    out << env.to_json_string() << "\n";
  }
  return checks_ok ? kExitOk : kExitCheckFailed;
}

int cmd_bounds(double alpha, std::optional<double> beta, std::optional<int> m,
               std::optional<int> n, const std::string& format, std::ostream& out) {
  Envelope env;
  env.command = "bounds";
  env.inputs["alpha"] = alpha;
  if (beta) env.inputs["beta"] = *beta;
  if (m) env.inputs["m"] = static_cast<long long>(*m);
  if (n) env.inputs["n"] = static_cast<long long>(*n);

  env.results["idp"] = idp_bound(alpha);
  env.results["helstrom"] = helstrom_bound(alpha);
  if (alpha < 1.0) env.results["duan_guo"] = duan_guo_bound(alpha);
  if (beta) env.results["separation"] = separation_bound(alpha, *beta);
  if (m.has_value() != n.has_value())
    throw std::invalid_argument("bounds: --m and --n must be given together");
  if (m && n) env.results["clone_mn"] = mn_cloning_bound(alpha, *m, *n);
  return emit(env, format, out, true);
}

int cmd_verify(double alpha, double beta, const std::string& format, std::ostream& out) {
  const SeparationTask task = make_task(alpha, beta);
  const TwoOutcomeOperation op = build_optimal_operation(task);
  const OperationDiagnostics diag = diagnose(op, task);
  const double bound = separation_bound(alpha, beta);

  Envelope env;
  env.command = "verify";
  env.inputs["alpha"] = alpha;
  env.inputs["beta"] = beta;

  CheckList checks;

  const double completeness = completeness_residual(op);
  env.results["completeness_residual"] = completeness;
  checks.expect(completeness <= kConstructionTol);

  env.results["bound"] = bound;
  env.results["p_s"] = diag.p_s;
  env.results["p_s_plus"] = diag.p_s_plus;
  env.results["p_s_minus"] = diag.p_s_minus;
  checks.expect(std::abs(diag.p_s - bound) <= kDerivedTol);
  checks.expect(std::abs(diag.p_s_plus - diag.p_s_minus) <= kConstructionTol);

  const double q_abs = std::abs(diag.q);
  env.results["q_abs"] = q_abs;
  env.results["q_phase"] = diag.theta;
  checks.expect(std::abs(q_abs - diag.p_s) <= kDerivedTol);
  if (beta > 0.0) checks.expect(std::abs(std::arg(diag.q * Complex(beta, 0.0))) <= kDerivedTol);

  const double residual = feasibility_residual(op);
  const double lhs = (1.0 - diag.p_s_plus) * (1.0 - diag.p_s_minus);
  const double rhs = std::norm(Complex(alpha, 0.0) - diag.q * Complex(beta, 0.0));
  env.results["feasibility_residual"] = residual;
  env.results["feasibility_saturation_gap"] = std::abs(lhs - rhs);
  checks.expect(residual <= kDerivedTol);
  checks.expect(std::abs(lhs - rhs) <= kDerivedTol);

  env.results["max_eig"] = diag.max_eig;
  checks.expect(diag.max_eig <= 1.0 + kConstructionTol);
  checks.expect(diag.max_eig >= 1.0 - kDensityTol && diag.witness.has_value());
  if (diag.witness) {
    const double nullspace_residual = norm(op.a_f * *diag.witness);
    env.results["witness_nullspace_residual"] = nullspace_residual;
    checks.expect(nullspace_residual <= kDensityTol);
  }

  // Mapped success outputs must land on the targets with amplitude mu.
  const double s1 = std::sqrt(1.0 - alpha * alpha);
  const double s2 = std::sqrt(1.0 - beta * beta);
  const ComplexVector map_plus = op.a_s * ComplexVector({1.0, 0.0});
  const ComplexVector map_minus = op.a_s * ComplexVector({alpha, s1});
  const double map_residual =
      std::max(norm(map_plus - (op.mu_plus * ComplexVector({1.0, 0.0}))),
               norm(map_minus - (op.mu_minus * ComplexVector({beta, s2}))));
  env.results["mapping_residual"] = map_residual;
  checks.expect(map_residual <= kConstructionTol);

  const bool failure_defined =
      std::norm(op.nu_plus) >= kBranchProbFloor && std::norm(op.nu_minus) >= kBranchProbFloor;
  if (failure_defined) {
    const FailureAnalysis fa = failure_states(op, task);
    env.results["failure_distance"] = fa.distance;
    checks.expect(fa.distance <= kDensityTol);
  }

  return emit(env, format, out, checks.all_ok);
}

int cmd_simulate(const std::string& pipeline, double alpha, double beta, int m, int n,
                 long long trials, std::uint64_t seed, bool state_vector,
                 const std::string& format, std::ostream& out) {
  sim::SimConfig config;
  config.trials = trials;
  config.seed = seed;
  config.state_vector_path = state_vector;

  Envelope env;
  env.command = "simulate";
  env.inputs["pipeline"] = pipeline;
  env.inputs["alpha"] = alpha;
  env.inputs["trials"] = trials;
  env.seed = seed;

  sim::SimulationReport report;
  if (pipeline == "separation") {
    config.pipeline = sim::Pipeline::separation_only;
    env.inputs["beta"] = beta;
    const SeparationTask task = make_task(alpha, beta);
    report = sim::run_separation(task, build_optimal_operation(task), config);
  } else if (pipeline == "discrimination") {
    config.pipeline = sim::Pipeline::separation_then_helstrom;
    env.inputs["beta"] = beta;
    report = sim::run_discrimination_pipeline(make_task(alpha, beta), config);
  } else if (pipeline == "cloning") {
    config.pipeline = sim::Pipeline::cloning;
    env.inputs["m"] = static_cast<long long>(m);
    env.inputs["n"] = static_cast<long long>(n);
    const StatePair base = angle_pair(std::acos(alpha), 2);
    report = sim::run_cloning(make_cloning_task(base, m, n), config);
  } else {
    throw std::invalid_argument("simulate: unknown pipeline '" + pipeline +
                                "' (expected separation, discrimination or cloning)");
  }

  env.results["trials"] = report.trials;
  bool all_ok = true;
  for (const auto& [label, count] : report.counts) {
    env.results[label + "_count"] = count;
    env.results[label + "_frequency"] = report.frequencies.at(label);
    env.results[label + "_expected"] = report.expected.at(label);
    env.results[label + "_stderr"] = report.stderrs.at(label);
    const double z = report.z_scores.at(label);
    env.results[label + "_z"] = z;
    all_ok = all_ok && std::abs(z) <= 4.0;
  }
  return emit(env, format, out, all_ok);
}

int cmd_oracle(double alpha, double beta, int grid, int refine_rounds, int phase_points,
               const std::string& format, std::ostream& out) {
  oracle::OracleConfig config;
  config.grid_points = grid;
  config.refine_rounds = refine_rounds;
  config.phase_points = phase_points;
  const oracle::OracleResult res = oracle::maximize(alpha, beta, config);
  const double bound = separation_bound(alpha, beta);
  const double gap = res.best_p_s - bound;

  Envelope env;
  env.command = "oracle";
  env.inputs["alpha"] = alpha;
  env.inputs["beta"] = beta;
  env.inputs["grid"] = static_cast<long long>(grid);
  env.results["best_p_s"] = res.best_p_s;
  env.results["best_p_plus"] = res.best_p_plus;
  env.results["best_p_minus"] = res.best_p_minus;
  env.results["best_phase"] = res.best_phase;
  env.results["bound"] = bound;
  env.results["gap"] = gap;
  env.results["feasible_count"] = res.feasible_count;
  env.results["evaluations"] = res.evaluations;
  env.results["guard_extremal_best"] = res.guard_extremal_best;
  env.results["guard_interior_best"] = res.guard_interior_best;

  const bool ok = gap >= -1e-3 && gap <= kDerivedTol &&
                  res.guard_interior_best <= res.guard_extremal_best + kDerivedTol;
  return emit(env, format, out, ok);
}

struct ScanArgs {
  std::optional<double> alpha;
  std::optional<double> alpha_min, alpha_max;
  double alpha_step = 0.1;
  std::optional<double> beta;
  std::optional<double> beta_min, beta_max;
  double beta_step = 0.1;
  int m = 1;
  std::optional<int> n_min, n_max;
  std::string output;
};

int cmd_scan(const ScanArgs& args, const std::string& format, std::ostream& out,
             std::ostream& err) {
  std::vector<std::string> columns;
  std::vector<Row> rows;

  const bool n_mode = args.n_min.has_value() || args.n_max.has_value();
  if (n_mode) {
    if (!args.alpha || !args.n_min || !args.n_max)
      throw std::invalid_argument("scan: copy-count mode needs --alpha, --n-min and --n-max");
    const double a = *args.alpha;
    columns = {"alpha", "m", "n", "clone_mn"};
    for (int n = *args.n_min; n <= *args.n_max; ++n) {
      if (n < args.m) continue;
      rows.push_back(Row{a, static_cast<long long>(args.m), static_cast<long long>(n),
                         mn_cloning_bound(a, args.m, n)});
    }
  } else {
    std::vector<double> alphas;
    if (args.alpha) {
      alphas = {*args.alpha};
    } else if (args.alpha_min && args.alpha_max) {
      alphas = range_values(*args.alpha_min, *args.alpha_max, args.alpha_step);
    } else {
      throw std::invalid_argument("scan: give --alpha or both --alpha-min and --alpha-max");
    }
    std::vector<double> betas;
    bool with_beta = true;
    if (args.beta) {
      betas = {*args.beta};
    } else if (args.beta_min && args.beta_max) {
      betas = range_values(*args.beta_min, *args.beta_max, args.beta_step);
    } else {
      with_beta = false;
      betas = {0.0};  // placeholder; beta columns omitted
    }

    columns = {"alpha"};
    if (with_beta) columns.insert(columns.end(), {"beta", "separation"});
    columns.insert(columns.end(), {"idp", "helstrom", "duan_guo"});
    for (double a : alphas) {
      for (double b : betas) {
        Row row{a};
        if (with_beta) {
          row.push_back(b);
          row.push_back(separation_bound(a, b));
        }
        row.push_back(idp_bound(a));
        row.push_back(helstrom_bound(a));
        row.push_back(duan_guo_bound(a));
        rows.push_back(std::move(row));
      }
    }
  }

  const auto write_table = [&](std::ostream& os) {
    if (format == "csv") {
      write_table_csv(os, columns, rows);
    } else {
      write_table_json(os, columns, rows);
    }
  };

  if (args.output.empty()) {
    write_table(out);
    err << "rows=" << rows.size() << "\n";
    return kExitOk;
  }

  std::ofstream file(args.output);
  if (!file) throw std::invalid_argument("scan: cannot open output path '" + args.output + "'");
  write_table(file);
  file.flush();
  if (!file) throw std::invalid_argument("scan: failed writing to '" + args.output + "'");

  Envelope env;
  env.command = "scan";
  env.inputs["output"] = args.output;
  env.results["rows"] = static_cast<long long>(rows.size());
  env.results["columns"] = static_cast<long long>(columns.size());
  // --format picks the table format; the envelope stays machine-readable JSON.
  return emit(env, "json", out, true);
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string Envelope::to_json_string() const {
  return envelope_to_json(*this).dump(2);
}

std::string Envelope::to_csv_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : results) {
    (void)v;
    os << (first ? "" : ",") << k;
    first = false;
  }
  os << "\n";
  first = true;
  for (const auto& [k, v] : results) {
    (void)k;
    os << (first ? "" : ",") << value_to_text(v);
    first = false;
  }
  os << "\n";
  return os.str();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Success-probability bounds, explicit operations and Monte Carlo checks for "
               "separating, discriminating and cloning a pair of non-orthogonal pure states"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds at a given overlap");
  double b_alpha = 0.0;
  std::optional<double> b_beta;
  std::optional<int> b_m, b_n;
  bounds->add_option("--alpha", b_alpha, "Initial overlap magnitude")->required();
  bounds->add_option("--beta", b_beta, "Target overlap magnitude");
  bounds->add_option("--m", b_m, "Initial copy count");
  bounds->add_option("--n", b_n, "Target copy count");

  auto* verify = app.add_subcommand("verify", "Build the optimal operation and check it");
  double v_alpha = 0.0, v_beta = 0.0;
  verify->add_option("--alpha", v_alpha, "Initial overlap magnitude")->required();
  verify->add_option("--beta", v_beta, "Target overlap magnitude")->required();

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo run against the closed forms");
  std::string s_pipeline;
  double s_alpha = 0.0, s_beta = 0.0;
  int s_m = 1, s_n = 2;
  long long s_trials = 1000000;
  std::uint64_t s_seed = 0;
  bool s_state_vector = false;
  simulate->add_option("--pipeline", s_pipeline, "separation | discrimination | cloning")
      ->required();
  simulate->add_option("--alpha", s_alpha, "Overlap magnitude")->required();
  simulate->add_option("--beta", s_beta, "Target overlap magnitude (separation pipelines)");
  simulate->add_option("--m", s_m, "Initial copies (cloning)");
  simulate->add_option("--n", s_n, "Target copies (cloning)");
  simulate->add_option("--trials", s_trials, "Trial count");
  simulate->add_option("--seed", s_seed, "RNG seed");
  simulate->add_flag("--state-vector", s_state_vector,
                     "Deriving branch probabilities by operator application");

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force certification of the bound");
  double o_alpha = 0.0, o_beta = 0.0;
  int o_grid = 200, o_refine = 3, o_phases = 64;
  oracle_cmd->add_option("--alpha", o_alpha, "Initial overlap magnitude")->required();
  oracle_cmd->add_option("--beta", o_beta, "Target overlap magnitude")->required();
  oracle_cmd->add_option("--grid", o_grid, "Grid points per probability axis");
  oracle_cmd->add_option("--refine-rounds", o_refine, "Refinement passes");
  oracle_cmd->add_option("--phase-points", o_phases, "Phase grid points");

  auto* scan = app.add_subcommand("scan", "Tabulate bounds over a parameter grid");
  ScanArgs sc;
  scan->add_option("--alpha", sc.alpha, "Fixed overlap magnitude");
  scan->add_option("--alpha-min", sc.alpha_min, "Range start");
  scan->add_option("--alpha-max", sc.alpha_max, "Range end (inclusive)");
  scan->add_option("--alpha-step", sc.alpha_step, "Range step");
  scan->add_option("--beta", sc.beta, "Fixed target overlap");
  scan->add_option("--beta-min", sc.beta_min, "Range start");
  scan->add_option("--beta-max", sc.beta_max, "Range end (inclusive)");
  scan->add_option("--beta-step", sc.beta_step, "Range step");
  scan->add_option("--m", sc.m, "Initial copies (copy-count mode)");
  scan->add_option("--n-min", sc.n_min, "Copy-count range start");
  scan->add_option("--n-max", sc.n_max, "Copy-count range end (inclusive)");
  scan->add_option("--output", sc.output, "Write the table to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (bounds->parsed()) return cmd_bounds(b_alpha, b_beta, b_m, b_n, format, out);
    if (verify->parsed()) return cmd_verify(v_alpha, v_beta, format, out);
    if (simulate->parsed())
      return cmd_simulate(s_pipeline, s_alpha, s_beta, s_m, s_n, s_trials, s_seed,
                          s_state_vector, format, out);
    if (oracle_cmd->parsed())
      return cmd_oracle(o_alpha, o_beta, o_grid, o_refine, o_phases, format, out);
    if (scan->parsed()) return cmd_scan(sc, format, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace qsep::cli
