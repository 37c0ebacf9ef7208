#pragma once

#include <stdexcept>
#include <vector>

#include "epsolve/problem.hpp"

namespace ep {

// argmin_{y in set} lambda * F(u, y) + 0.5 * ||y - w||^2
struct ProxRequest {
  const EquilibriumProblem* problem = nullptr;
  Vector u;
  Vector w;
  double lambda = 0.0;
  FeasibleSet set;
};

struct ProxResult {
  Vector minimizer;
  int inner_iterations = 0;
  double kkt_residual = 0.0;
};

struct ProxOptions {
  double tol = 1e-10;
  int max_inner = 10000;
  std::vector<double>* objective_trace = nullptr;  // inner objective per iterate
};

struct ProxFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double prox_objective(const ProxRequest& req, const Vector& y);
ProxResult prox(const ProxRequest& req, const ProxOptions& opt = {});

}  // namespace ep
