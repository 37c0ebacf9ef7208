#pragma once

#include <string>

namespace ep {

enum class Schedule { SubHalf, ConstHalf, NearOne };

Schedule schedule_from_name(const std::string& name);  // sub_half | half | near_one
std::string schedule_name(Schedule s);

// Relaxation sequence phi_n for each schedule:
//   SubHalf  : (n - 0.5) / (2n)
//   ConstHalf: 0.5
//   NearOne  : (n - 0.1) / n
double phi_value(Schedule s, long n);

// Largest theta satisfying descent_certificate(theta, phi_n, phi_np1, eps) >= 0,
// for phi below 1/2 (positive root of the quadratic, cancellation-free form).
double beta_bound(double phi_n, double phi_np1, double eps);

// Discriminant of that quadratic.
double beta_discriminant(double phi_n, double phi_np1, double eps);

// Same root for phi above 1/2, where the quadratic's leading coefficient flips
// sign: sqrt(p^2 + q) - p with the p, q below.
double large_phi_p(double phi_n, double phi_np1);
double large_phi_q(double phi_n, double phi_np1, double eps);
double large_phi_bound(double phi_n, double phi_np1, double eps);

// -(2 - 1/phi_np1) theta^2 - (1/phi_n + 1/phi_np1 - 1) theta + 1/phi_n - 1 - eps
double descent_certificate(double theta, double phi_n, double phi_np1, double eps);

// (1 + theta) theta + (1/phi) (1 - phi) (1 - theta) theta
double delta_coeff(double theta, double phi);

struct InertiaOptions {
  double eps = 1e-6;
  double safety = 1.0;       // in (0, 1], scales the bound
  bool monotone_clamp = false;
};

struct InertiaParams {
  double theta = 0.0;
  double phi = 1.0;
  std::string case_tag;  // small_phi | half | large_phi
  double bound = 0.0;
  bool clamped = false;
};

// Inertial weight applied at iteration n (n >= 1); theta_1 == 0.
InertiaParams inertia_at(Schedule s, long n, double theta_prev,
                         const InertiaOptions& opt = {});

// min(theta_cap, eps_n / displacement), or theta_cap when displacement == 0
double online_theta(double theta_cap, double eps_n, double displacement);

}  // namespace ep
