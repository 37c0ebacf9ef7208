#pragma once

#include <iosfwd>
#include <vector>

#include "epsolve/inertia.hpp"
#include "epsolve/problem.hpp"
#include "epsolve/prox.hpp"

namespace ep {

enum class StopReason { Converged, MaxIter, ExactSolution, InnerFailure };
enum class StopMode { Tol, TolAndStep };

const char* stop_reason_name(StopReason r);

struct SolverConfig {
  double lambda1 = 0.1;
  double mu = 0.5;
  Schedule schedule = Schedule::NearOne;
  InertiaOptions inertia;
  double stop_tol = 1e-5;
  long max_iter = 10000;
  StopMode stop_mode = StopMode::Tol;
  bool record_gamma = false;       // needs known_solution
  bool measure_time = true;        // false writes 0 for reproducible traces
  double online_theta_cap = 0.9;   // baselines only
  double online_eps_scale = 100.0; // baselines only: eps_n = scale/(n+1)^2
  ProxOptions prox_opt;
};

struct IterationRecord {
  long n = 0;
  Vector x;       // iterate entering the iteration
  Vector w, y, z; // z is empty when the iteration stopped before computing it
  Vector x_next;
  double lambda = 0.0;
  double theta = 0.0;
  double phi = 1.0;
  double tol = 0.0;
  double gamma = 0.0;
  double wall_time_ms = 0.0;
};

struct RunResult {
  std::vector<IterationRecord> records;
  StopReason stop_reason = StopReason::MaxIter;
  Vector final_point;
  long iterations = 0;
  double total_time_ms = 0.0;
  int clamp_events = 0;
};

// Relaxed inertial subgradient extragradient with self-adaptive step size.
RunResult solve_rise(const EquilibriumProblem& prob, const Vector& x0,
                     const Vector& x1, const SolverConfig& cfg);

// Two-projection extragradient, fixed step, online inertia.
RunResult solve_extragradient(const EquilibriumProblem& prob, const Vector& x0,
                              const Vector& x1, const SolverConfig& cfg);

// Subgradient extragradient (half-space second projection), adaptive step,
// online inertia, full update x_{n+1} = z_n.
RunResult solve_subgradient_eg(const EquilibriumProblem& prob, const Vector& x0,
                               const Vector& x1, const SolverConfig& cfg);

double gamma_value(const Vector& x, const Vector& x_prev, double theta, double phi,
                   const Vector& solution);
double gamma_diagnostic(const IterationRecord& prev, const IterationRecord& cur,
                        const Vector& solution);

void write_trace_csv(std::ostream& out, const RunResult& result);
void write_summary_json(std::ostream& out, const RunResult& result,
                        const std::string& algorithm);

}  // namespace ep
