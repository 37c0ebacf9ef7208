#include "epsolve/inertia.hpp"

#include <cmath>
#include <stdexcept>

namespace ep {

Schedule schedule_from_name(const std::string& name) {
  if (name == "sub_half") return Schedule::SubHalf;
  if (name == "half") return Schedule::ConstHalf;
  if (name == "near_one") return Schedule::NearOne;
  throw std::invalid_argument("unknown schedule: " + name);
}

std::string schedule_name(Schedule s) {
  switch (s) {
    case Schedule::SubHalf: return "sub_half";
    case Schedule::ConstHalf: return "half";
    case Schedule::NearOne: return "near_one";
  }
  throw std::logic_error("bad schedule");
}

double phi_value(Schedule s, long n) {
  if (n < 1) throw std::domain_error("n must be >= 1");
  auto nn = static_cast<double>(n);
  switch (s) {
    case Schedule::SubHalf: return (nn - 0.5) / (2.0 * nn);
    case Schedule::ConstHalf: return 0.5;
    case Schedule::NearOne: return (nn - 0.1) / nn;
  }
  throw std::logic_error("bad schedule");
}

double beta_discriminant(double phi_n, double phi_np1, double eps) {
  double rn = 1.0 / phi_n;
  double rn1 = 1.0 / phi_np1;
  double a = rn + rn1 - 1.0;
  double disc2 = a * a - 4.0 * (rn - 1.0 - eps) * (rn1 - 2.0);
  if (disc2 <= 0.0) throw std::domain_error("nonpositive discriminant");
  return std::sqrt(disc2);
}

double beta_bound(double phi_n, double phi_np1, double eps) {
  if (!(phi_n > 0.0 && phi_n < 0.5) || !(phi_np1 > 0.0 && phi_np1 < 0.5))
    throw std::domain_error("beta_bound needs phi in (0, 1/2)");
  double rn = 1.0 / phi_n;
  double rn1 = 1.0 / phi_np1;
  if (!(rn - rn1 + 3.0 > 0.0))
    throw std::domain_error("beta_bound needs 1/phi_n - 1/phi_np1 + 3 > 0");
  double a = rn + rn1 - 1.0;
  double delta = beta_discriminant(phi_n, phi_np1, eps);
  // (a - delta) / (2 (rn1 - 2)) cancels badly; multiply through by (a + delta)
  return 2.0 * (rn - 1.0 - eps) / (a + delta);
}

double large_phi_p(double phi_n, double phi_np1) {
  if (!(phi_n > 0.5 && phi_n < 1.0) || !(phi_np1 > 0.5 && phi_np1 < 1.0))
    throw std::domain_error("large-phi bound needs phi in (1/2, 1)");
  double rn = 1.0 / phi_n;
  double rn1 = 1.0 / phi_np1;
  return 0.5 * (rn + rn1 - 1.0) / (2.0 - rn1);
}

double large_phi_q(double phi_n, double phi_np1, double eps) {
  if (!(phi_n > 0.5 && phi_n < 1.0) || !(phi_np1 > 0.5 && phi_np1 < 1.0))
    throw std::domain_error("large-phi bound needs phi in (1/2, 1)");
  double rn = 1.0 / phi_n;
  double rn1 = 1.0 / phi_np1;
  double q = (rn - 1.0 - eps) / (2.0 - rn1);
  if (q < 0.0) throw std::domain_error("large-phi bound needs 1/phi_n >= 1 + eps");
  return q;
}

double large_phi_bound(double phi_n, double phi_np1, double eps) {
  double p = large_phi_p(phi_n, phi_np1);
  double q = large_phi_q(phi_n, phi_np1, eps);
  // sqrt(p^2 + q) - p without cancellation
  return q / (std::sqrt(p * p + q) + p);
}

double descent_certificate(double theta, double phi_n, double phi_np1, double eps) {
  double rn = 1.0 / phi_n;
  double rn1 = 1.0 / phi_np1;
  return -(2.0 - rn1) * theta * theta - (rn + rn1 - 1.0) * theta + rn - 1.0 - eps;
}

double delta_coeff(double theta, double phi) {
  return (1.0 + theta) * theta + (1.0 / phi) * (1.0 - phi) * (1.0 - theta) * theta;
}

InertiaParams inertia_at(Schedule s, long n, double theta_prev,
                         const InertiaOptions& opt) {
  if (n < 1) throw std::domain_error("n must be >= 1");
  InertiaParams p;
  p.phi = phi_value(s, n);
  switch (s) {
    case Schedule::SubHalf: p.case_tag = "small_phi"; break;
    case Schedule::ConstHalf: p.case_tag = "half"; break;
    case Schedule::NearOne: p.case_tag = "large_phi"; break;
  }
  if (s == Schedule::NearOne && p.phi > 1.0 - opt.eps)
    throw std::domain_error("schedule exhausted: phi_n exceeds 1 - eps");
  if (n == 1) return p;
  switch (s) {
    case Schedule::SubHalf:
      p.bound = beta_bound(phi_value(s, n), phi_value(s, n + 1), opt.eps);
      break;
    case Schedule::ConstHalf:
      p.bound = (1.0 - opt.eps) / 3.0;
      break;
    case Schedule::NearOne:
      p.bound = large_phi_bound(phi_value(s, n), phi_value(s, n + 1), opt.eps);
      break;
  }
  p.theta = opt.safety * p.bound;
  if (opt.monotone_clamp && p.theta < theta_prev) {
    p.theta = theta_prev;
    p.clamped = true;
  }
  return p;
}

double online_theta(double theta_cap, double eps_n, double displacement) {
  if (displacement == 0.0) return theta_cap;
  return std::min(theta_cap, eps_n / displacement);
}

}  // namespace ep
