#include "epsolve/solver.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace ep {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

const char* stop_reason_name(StopReason r) {
  switch (r) {
    case StopReason::Converged: return "Converged";
    case StopReason::MaxIter: return "MaxIter";
    case StopReason::ExactSolution: return "ExactSolution";
    case StopReason::InnerFailure: return "InnerFailure";
  }
  return "?";
}

double gamma_value(const Vector& x, const Vector& x_prev, double theta, double phi,
                   const Vector& solution) {
  return (x - solution).squaredNorm() - theta * (x_prev - solution).squaredNorm() +
         delta_coeff(theta, phi) * (x - x_prev).squaredNorm();
}

double gamma_diagnostic(const IterationRecord& prev, const IterationRecord& cur,
                        const Vector& solution) {
  return gamma_value(cur.x, prev.x, cur.theta, cur.phi, solution);
}

RunResult solve_rise(const EquilibriumProblem& prob, const Vector& x0,
                     const Vector& x1, const SolverConfig& cfg) {
  if (x0.size() != x1.size()) throw std::invalid_argument("x0/x1 size mismatch");
  RunResult res;
  Vector x_prev = x0, x = x1;
  double lambda = cfg.lambda1;
  double theta_state = 0.0;
  auto t_total = Clock::now();
  for (long n = 1; n <= cfg.max_iter; ++n) {
    auto t0 = Clock::now();
    InertiaParams ip = inertia_at(cfg.schedule, n, theta_state, cfg.inertia);
    theta_state = ip.theta;
    res.clamp_events += ip.clamped ? 1 : 0;

    IterationRecord rec;
    rec.n = n;
    rec.x = x;
    rec.lambda = lambda;
    rec.theta = ip.theta;
    rec.phi = ip.phi;
    rec.gamma = (cfg.record_gamma && prob.known_solution)
                    ? gamma_value(x, x_prev, ip.theta, ip.phi, *prob.known_solution)
                    : kNan;

    Vector w = x + ip.theta * (x - x_prev);
    rec.w = w;
    Vector y;
    try {
      y = prox({&prob, w, w, lambda, prob.feasible_set}, cfg.prox_opt).minimizer;
    } catch (const ProxFailure&) {
      res.stop_reason = StopReason::InnerFailure;
      res.final_point = x;
      res.iterations = n;
      res.total_time_ms = ms_since(t_total);
      return res;
    }
    rec.y = y;
    double tol = (y - w).norm();
    rec.tol = tol;

    if (tol == 0.0) {
      rec.z = y;
      rec.x_next = y;
      rec.wall_time_ms = cfg.measure_time ? ms_since(t0) : 0.0;
      res.records.push_back(std::move(rec));
      res.stop_reason = StopReason::ExactSolution;
      res.final_point = w;
      res.iterations = n;
      res.total_time_ms = cfg.measure_time ? ms_since(t_total) : 0.0;
      return res;
    }
    if (cfg.stop_mode == StopMode::Tol && tol < cfg.stop_tol) {
      rec.wall_time_ms = cfg.measure_time ? ms_since(t0) : 0.0;
      res.records.push_back(std::move(rec));
      res.stop_reason = StopReason::Converged;
      res.final_point = y;
      res.iterations = n;
      res.total_time_ms = cfg.measure_time ? ms_since(t_total) : 0.0;
      return res;
    }

    Vector omega = prob.partial_subgradient(w, y);
    HalfSpace tn{w - lambda * omega - y, y};
    Vector z;
    try {
      z = prox({&prob, y, w, lambda, FeasibleSet{tn}}, cfg.prox_opt).minimizer;
    } catch (const ProxFailure&) {
      res.stop_reason = StopReason::InnerFailure;
      res.final_point = x;
      res.iterations = n;
      res.total_time_ms = ms_since(t_total);
      return res;
    }
    rec.z = z;
    Vector x_next = (1.0 - ip.phi) * w + ip.phi * z;
    rec.x_next = x_next;

    double den = prob.eval(w, z) - prob.eval(w, y) - prob.eval(y, z);
    double lambda_next = lambda;
    if (den > 0.0) {
      double cand = cfg.mu * ((w - y).squaredNorm() + (z - y).squaredNorm()) /
                    (2.0 * den);
      lambda_next = std::min(cand, lambda);
    }

    rec.wall_time_ms = cfg.measure_time ? ms_since(t0) : 0.0;
    res.records.push_back(std::move(rec));

    if (cfg.stop_mode == StopMode::TolAndStep && tol < cfg.stop_tol &&
        (x_next - x).norm() < cfg.stop_tol) {
      res.stop_reason = StopReason::Converged;
      res.final_point = x_next;
      res.iterations = n;
      res.total_time_ms = cfg.measure_time ? ms_since(t_total) : 0.0;
      return res;
    }

    lambda = lambda_next;
    x_prev = std::move(x);
    x = std::move(x_next);
  }
  res.stop_reason = StopReason::MaxIter;
  res.final_point = x;
  res.iterations = cfg.max_iter;
  res.total_time_ms = cfg.measure_time ? ms_since(t_total) : 0.0;
  return res;
}

RunResult solve_extragradient(const EquilibriumProblem& prob, const Vector& x0,
                              const Vector& x1, const SolverConfig& cfg) {
  if (x0.size() != x1.size()) throw std::invalid_argument("x0/x1 size mismatch");
  RunResult res;
  Vector x_prev = x0, x = x1;
  const double lambda = cfg.lambda1;
  auto t_total = Clock::now();
  for (long n = 1; n <= cfg.max_iter; ++n) {
    auto t0 = Clock::now();
    double disp = (x - x_prev).norm();
    double eps_n = cfg.online_eps_scale / static_cast<double>((n + 1) * (n + 1));
    double theta = online_theta(cfg.online_theta_cap, eps_n, disp);

    IterationRecord rec;
    rec.n = n;
    rec.x = x;
    rec.lambda = lambda;
    rec.theta = theta;
    rec.phi = 1.0;
    rec.gamma = kNan;

    Vector w = x + theta * (x - x_prev);
    rec.w = w;
    Vector y, x_next;
    try {
      y = prox({&prob, w, w, lambda, prob.feasible_set}, cfg.prox_opt).minimizer;
      rec.y = y;
      double tol = (y - w).norm();
      rec.tol = tol;
      if (tol == 0.0) {
        rec.z = y;
        rec.x_next = y;
        rec.wall_time_ms = cfg.measure_time ? ms_since(t0) : 0.0;
        res.records.push_back(std::move(rec));
        res.stop_reason = StopReason::ExactSolution;
        res.final_point = w;
        res.iterations = n;
        res.total_time_ms = cfg.measure_time ? ms_since(t_total) : 0.0;
        return res;
      }
      if (cfg.stop_mode == StopMode::Tol && tol < cfg.stop_tol) {
        rec.wall_time_ms = cfg.measure_time ? ms_since(t0) : 0.0;
        res.records.push_back(std::move(rec));
        res.stop_reason = StopReason::Converged;
        res.final_point = y;
        res.iterations = n;
        res.total_time_ms = cfg.measure_time ? ms_since(t_total) : 0.0;
        return res;
      }
      x_next = prox({&prob, y, w, lambda, prob.feasible_set}, cfg.prox_opt).minimizer;
    } catch (const ProxFailure&) {
      res.stop_reason = StopReason::InnerFailure;
      res.final_point = x;
      res.iterations = n;
      res.total_time_ms = ms_since(t_total);
      return res;
    }
    rec.z = x_next;
    rec.x_next = x_next;
    rec.wall_time_ms = cfg.measure_time ? ms_since(t0) : 0.0;
    res.records.push_back(std::move(rec));

    if (cfg.stop_mode == StopMode::TolAndStep && rec.tol < cfg.stop_tol &&
        (x_next - x).norm() < cfg.stop_tol) {
      res.stop_reason = StopReason::Converged;
      res.final_point = x_next;
      res.iterations = n;
      res.total_time_ms = cfg.measure_time ? ms_since(t_total) : 0.0;
      return res;
    }

    x_prev = std::move(x);
    x = std::move(x_next);
  }
  res.stop_reason = StopReason::MaxIter;
  res.final_point = x;
  res.iterations = cfg.max_iter;
  res.total_time_ms = cfg.measure_time ? ms_since(t_total) : 0.0;
  return res;
}

RunResult solve_subgradient_eg(const EquilibriumProblem& prob, const Vector& x0,
                               const Vector& x1, const SolverConfig& cfg) {
  if (x0.size() != x1.size()) throw std::invalid_argument("x0/x1 size mismatch");
  RunResult res;
  Vector x_prev = x0, x = x1;
  double lambda = cfg.lambda1;
  auto t_total = Clock::now();
  for (long n = 1; n <= cfg.max_iter; ++n) {
    auto t0 = Clock::now();
    double disp = (x - x_prev).norm();
    double eps_n = cfg.online_eps_scale / static_cast<double>((n + 1) * (n + 1));
    double theta = online_theta(cfg.online_theta_cap, eps_n, disp);

    IterationRecord rec;
    rec.n = n;
    rec.x = x;
    rec.lambda = lambda;
    rec.theta = theta;
    rec.phi = 1.0;
    rec.gamma = kNan;

    Vector w = x + theta * (x - x_prev);
    rec.w = w;
    Vector y, z;
    try {
      y = prox({&prob, w, w, lambda, prob.feasible_set}, cfg.prox_opt).minimizer;
      rec.y = y;
      double tol = (y - w).norm();
      rec.tol = tol;
      if (tol == 0.0) {
        rec.z = y;
        rec.x_next = y;
        rec.wall_time_ms = cfg.measure_time ? ms_since(t0) : 0.0;
        res.records.push_back(std::move(rec));
        res.stop_reason = StopReason::ExactSolution;
        res.final_point = w;
        res.iterations = n;
        res.total_time_ms = cfg.measure_time ? ms_since(t_total) : 0.0;
        return res;
      }
      if (cfg.stop_mode == StopMode::Tol && tol < cfg.stop_tol) {
        rec.wall_time_ms = cfg.measure_time ? ms_since(t0) : 0.0;
        res.records.push_back(std::move(rec));
        res.stop_reason = StopReason::Converged;
        res.final_point = y;
        res.iterations = n;
        res.total_time_ms = cfg.measure_time ? ms_since(t_total) : 0.0;
        return res;
      }
      Vector omega = prob.partial_subgradient(w, y);
      HalfSpace tn{w - lambda * omega - y, y};
      z = prox({&prob, y, w, lambda, FeasibleSet{tn}}, cfg.prox_opt).minimizer;
    } catch (const ProxFailure&) {
      res.stop_reason = StopReason::InnerFailure;
      res.final_point = x;
      res.iterations = n;
      res.total_time_ms = ms_since(t_total);
      return res;
    }
    rec.z = z;
    rec.x_next = z;

    double den = prob.eval(w, z) - prob.eval(w, y) - prob.eval(y, z);
    double lambda_next = lambda;
    if (den > 0.0) {
      double cand = cfg.mu * ((w - y).squaredNorm() + (z - y).squaredNorm()) /
                    (2.0 * den);
      lambda_next = std::min(cand, lambda);
    }

    rec.wall_time_ms = cfg.measure_time ? ms_since(t0) : 0.0;
    res.records.push_back(std::move(rec));

    if (cfg.stop_mode == StopMode::TolAndStep && rec.tol < cfg.stop_tol &&
        (z - x).norm() < cfg.stop_tol) {
      res.stop_reason = StopReason::Converged;
      res.final_point = z;
      res.iterations = n;
      res.total_time_ms = cfg.measure_time ? ms_since(t_total) : 0.0;
      return res;
    }

    lambda = lambda_next;
    x_prev = std::move(x);
    x = std::move(z);
  }
  res.stop_reason = StopReason::MaxIter;
  res.final_point = x;
  res.iterations = cfg.max_iter;
  res.total_time_ms = cfg.measure_time ? ms_since(t_total) : 0.0;
  return res;
}

void write_trace_csv(std::ostream& out, const RunResult& result) {
  out << "n,tol,lambda,theta,phi,gamma,elapsed_ms\n";
  for (const auto& r : result.records) {
    out << r.n << ',' << fmt(r.tol) << ',' << fmt(r.lambda) << ',' << fmt(r.theta)
        << ',' << fmt(r.phi) << ',' << fmt(r.gamma) << ',' << fmt(r.wall_time_ms)
        << '\n';
  }
}

void write_summary_json(std::ostream& out, const RunResult& result,
                        const std::string& algorithm) {
  nlohmann::json j;
  j["algorithm"] = algorithm;
  j["stop_reason"] = stop_reason_name(result.stop_reason);
  j["iterations"] = result.iterations;
  j["total_time_ms"] = result.total_time_ms;
  j["clamp_events"] = result.clamp_events;
  if (!result.records.empty()) {
    j["final_tol"] = result.records.back().tol;
    j["lambda_final"] = result.records.back().lambda;
  }
  out << j.dump(2) << '\n';
}

}  // namespace ep
