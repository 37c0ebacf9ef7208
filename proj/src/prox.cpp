#include "epsolve/prox.hpp"

namespace ep {

double prox_objective(const ProxRequest& req, const Vector& y) {
  return req.lambda * req.problem->eval(req.u, y) + 0.5 * (y - req.w).squaredNorm();
}

namespace {

ProxResult prox_linear(const ProxRequest& req) {
  Vector c = req.problem->partial_subgradient(req.u, req.u);
  ProxResult res;
  res.minimizer = project(req.set, req.w - req.lambda * c);
  return res;
}

ProxResult prox_quadratic(const ProxRequest& req, const ProxOptions& opt) {
  const QuadraticData& d = *req.problem->quad;
  double lam = req.lambda;
  // grad(y) = lam*(P u + q + 2 Q y - Q u) + (y - w), Lipschitz constant 2*lam*||Q|| + 1
  Vector c = lam * (d.P * req.u + d.q - d.Q * req.u) - req.w;
  double L = 2.0 * lam * d.q_norm + 1.0;
  Vector y = project(req.set, req.w);
  for (int k = 0; k <= opt.max_inner; ++k) {
    if (opt.objective_trace) opt.objective_trace->push_back(prox_objective(req, y));
    Vector g = c + 2.0 * lam * (d.Q * y) + y;
    double residual = (y - project(req.set, y - g)).norm();
    if (residual <= opt.tol) {
      ProxResult res;
      res.minimizer = std::move(y);
      res.inner_iterations = k;
      res.kkt_residual = residual;
      return res;
    }
    y = project(req.set, y - g / L);
  }
  throw ProxFailure("projected gradient did not reach tolerance");
}

}  // namespace

ProxResult prox(const ProxRequest& req, const ProxOptions& opt) {
  if (req.problem->prox_structure == ProxStructure::LinearInY) return prox_linear(req);
  return prox_quadratic(req, opt);
}

}  // namespace ep
