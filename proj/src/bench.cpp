#include "epsolve/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace ep {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

const std::vector<std::string>& known_algorithms() {
  static const std::vector<std::string> names = {
      "rise_sub_half", "rise_half", "rise_near_one", "eg_fixed", "seg_adaptive"};
  return names;
}

SolverConfig algorithm_config(const std::string& name, const EquilibriumProblem& prob,
                              const BenchOptions& opt) {
  SolverConfig cfg;
  cfg.stop_tol = opt.stop_tol;
  cfg.max_iter = opt.max_iter;
  cfg.stop_mode = opt.stop_mode;
  cfg.measure_time = opt.measure_time;
  cfg.record_gamma = opt.record_gamma;
  cfg.inertia.monotone_clamp = opt.monotone_clamp;
  cfg.inertia.safety = opt.safety;
  if (opt.eps) cfg.inertia.eps = *opt.eps;
  double a1 = prob.lipschitz_a1, a2 = prob.lipschitz_a2;
  if (name == "rise_sub_half" || name == "rise_half" || name == "rise_near_one") {
    cfg.schedule = name == "rise_sub_half"  ? Schedule::SubHalf
                   : name == "rise_half"    ? Schedule::ConstHalf
                                            : Schedule::NearOne;
    cfg.lambda1 = opt.lambda1.value_or(0.1);
    cfg.mu = opt.mu.value_or(0.5);
    return cfg;
  }
  if (name == "eg_fixed") {
    cfg.lambda1 = opt.lambda1.value_or(0.9 * std::min(1.0 / (2.0 * a1), 1.0 / (2.0 * a2)));
    return cfg;
  }
  if (name == "seg_adaptive") {
    cfg.lambda1 = opt.lambda1.value_or(0.1);
    double sigma = 0.9 * std::min({1.0, 0.5 * a1, 0.5 * a2});
    cfg.mu = opt.mu.value_or(0.9 * sigma);
    return cfg;
  }
  throw std::invalid_argument("unknown algorithm: " + name);
}

RunResult run_algorithm(const LoadedProblem& lp, const std::string& name,
                        const BenchOptions& opt) {
  SolverConfig cfg = algorithm_config(name, lp.problem, opt);
  if (name == "eg_fixed") return solve_extragradient(lp.problem, lp.x0, lp.x1, cfg);
  if (name == "seg_adaptive")
    return solve_subgradient_eg(lp.problem, lp.x0, lp.x1, cfg);
  return solve_rise(lp.problem, lp.x0, lp.x1, cfg);
}

SummaryTable run_experiment(const ExperimentConfig& cfg) {
  SummaryTable table;
  struct Acc {
    long iter_sum = 0;
    double ms_sum = 0.0;
    int converged = 0;
  };
  std::vector<Acc> acc(cfg.algorithms.size());
  std::string case_label;
  for (int r = 0; r < cfg.replications; ++r) {
    LoadedProblem lp;
    if (const auto* ns = std::get_if<NashSpec>(&cfg.problem)) {
      NashCournotInstance inst = generate_nash_cournot(ns->N, cfg.seed + static_cast<std::uint64_t>(r));
      lp.problem = make_problem(inst);
      lp.x0 = inst.x0;
      lp.x1 = inst.x1;
      lp.label = "N=" + std::to_string(ns->N);
    } else if (const auto* bs = std::get_if<BallSpec>(&cfg.problem)) {
      BallInstance inst = make_ball_instance(bs->case_id);
      lp.problem = make_problem(inst);
      lp.x0 = inst.x0;
      lp.x1 = inst.x1;
      lp.label = "case" + std::to_string(bs->case_id);
    } else {
      lp = load_problem_file(std::get<FileSpec>(cfg.problem).path);
    }
    case_label = lp.label;
    for (std::size_t a = 0; a < cfg.algorithms.size(); ++a) {
      RunResult res = run_algorithm(lp, cfg.algorithms[a], cfg.options);
      if (res.stop_reason == StopReason::Converged ||
          res.stop_reason == StopReason::ExactSolution) {
        acc[a].iter_sum += res.iterations;
        acc[a].ms_sum += res.total_time_ms;
        ++acc[a].converged;
      }
    }
  }
  for (std::size_t a = 0; a < cfg.algorithms.size(); ++a) {
    SummaryRow row;
    row.algorithm = cfg.algorithms[a];
    row.case_label = case_label;
    row.replications = cfg.replications;
    row.converged = acc[a].converged;
    if (acc[a].converged > 0) {
      row.mean_iter = static_cast<double>(acc[a].iter_sum) / acc[a].converged;
      row.mean_ms = acc[a].ms_sum / acc[a].converged;
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_summary_csv(std::ostream& out, const SummaryTable& table) {
  out << "algorithm,case,mean_iter,mean_ms,converged,replications\n";
  for (const auto& r : table.rows) {
    out << r.algorithm << ',' << r.case_label << ',' << fmt(r.mean_iter) << ','
        << fmt(r.mean_ms) << ',' << r.converged << ',' << r.replications << '\n';
  }
}

void emit_plot_data(std::ostream& out,
                    const std::vector<std::pair<std::string, RunResult>>& series) {
  for (const auto& [label, result] : series) {
    out << "# " << label << '\n';
    for (const auto& rec : result.records)
      out << rec.n << ' ' << fmt(rec.tol) << '\n';
    out << '\n';
  }
}

Vector compute_reference_solution(const LoadedProblem& lp, double tol, long max_iter) {
  BenchOptions opt;
  opt.stop_tol = tol;
  opt.max_iter = max_iter;
  RunResult res = run_algorithm(lp, "rise_near_one", opt);
  if (res.stop_reason != StopReason::Converged &&
      res.stop_reason != StopReason::ExactSolution)
    throw std::runtime_error("reference solve did not converge");
  return res.final_point;
}

}  // namespace ep
