#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "epsolve/solver.hpp"

namespace ep {

// Canonical algorithm names:
//   rise_sub_half, rise_half, rise_near_one  (relaxed inertial scheme per phi schedule)
//   eg_fixed                                 (fixed-step extragradient, online inertia)
//   seg_adaptive                             (adaptive-step subgradient extragradient)
const std::vector<std::string>& known_algorithms();

struct BenchOptions {
  double stop_tol = 1e-5;
  long max_iter = 10000;
  StopMode stop_mode = StopMode::Tol;
  bool measure_time = true;
  bool monotone_clamp = false;
  bool record_gamma = false;
  double safety = 1.0;
  std::optional<double> lambda1;
  std::optional<double> mu;
  std::optional<double> eps;
};

SolverConfig algorithm_config(const std::string& name, const EquilibriumProblem& prob,
                              const BenchOptions& opt);
RunResult run_algorithm(const LoadedProblem& lp, const std::string& name,
                        const BenchOptions& opt);

struct NashSpec {
  int N = 20;
};
struct BallSpec {
  int case_id = 1;
};
struct FileSpec {
  std::string path;
};
using ProblemSpec = std::variant<NashSpec, BallSpec, FileSpec>;

struct ExperimentConfig {
  ProblemSpec problem;
  std::vector<std::string> algorithms;
  int replications = 1;
  std::uint64_t seed = 1;
  BenchOptions options;
};

struct SummaryRow {
  std::string algorithm;
  std::string case_label;
  double mean_iter = 0.0;
  double mean_ms = 0.0;
  int converged = 0;
  int replications = 0;
};

struct SummaryTable {
  std::vector<SummaryRow> rows;
};

SummaryTable run_experiment(const ExperimentConfig& cfg);
void write_summary_csv(std::ostream& out, const SummaryTable& table);

// One block per series: "# <label>" header, then "<n> <tol>" rows.
void emit_plot_data(std::ostream& out,
                    const std::vector<std::pair<std::string, RunResult>>& series);

Vector compute_reference_solution(const LoadedProblem& lp, double tol = 1e-10,
                                  long max_iter = 200000);

}  // namespace ep
