#include <stdexcept>
#include <cmath>

#include "doctest.h"
#include "epsolve/inertia.hpp"

TEST_CASE("phi schedules") {
  CHECK(ep::phi_value(ep::Schedule::SubHalf, 1) == 0.25);
  CHECK(ep::phi_value(ep::Schedule::SubHalf, 2) == 0.375);
  CHECK(ep::phi_value(ep::Schedule::ConstHalf, 17) == 0.5);
  CHECK(ep::phi_value(ep::Schedule::NearOne, 1) == doctest::Approx(0.9));
  CHECK(ep::phi_value(ep::Schedule::NearOne, 10) == doctest::Approx(0.99));
  CHECK_THROWS_AS(ep::phi_value(ep::Schedule::NearOne, 0), std::domain_error);
  CHECK(ep::schedule_from_name("sub_half") == ep::Schedule::SubHalf);
  CHECK(ep::schedule_name(ep::Schedule::ConstHalf) == "half");
  CHECK_THROWS_AS(ep::schedule_from_name("quarter"), std::invalid_argument);
}

TEST_CASE("small-phi bound against frozen high-precision values") {
  CHECK(ep::beta_bound(0.25, 0.375, 1e-6) ==
        doctest::Approx(0.56726983068267680).epsilon(1e-12));
  CHECK(ep::beta_discriminant(0.25, 0.375, 1e-6) ==
        doctest::Approx(4.9103068924230976).epsilon(1e-12));
  CHECK(ep::beta_bound(0.25, 0.25, 0.01) ==
        doctest::Approx(0.49800159744510856).epsilon(1e-12));
  // eps -> 0 limit at phi = 1/4: discriminant 5, bound 1/2
  CHECK(ep::beta_discriminant(0.25, 0.25, 0.0) == 5.0);
  CHECK(ep::beta_bound(0.25, 0.25, 1e-12) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("large-phi bound against frozen high-precision values") {
  CHECK(ep::large_phi_p(0.8, 0.8) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ep::large_phi_q(0.8, 0.8, 0.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(ep::large_phi_bound(0.8, 0.8, 0.0) ==
        doctest::Approx(0.15470053837925153).epsilon(1e-12));
  CHECK(ep::large_phi_bound(0.9, 0.95, 1e-6) ==
        doctest::Approx(0.089024697155797066).epsilon(1e-12));
  CHECK(ep::large_phi_bound(0.95, 2.9 / 3.0, 1e-6) ==
        doctest::Approx(0.046493264169934449).epsilon(1e-12));
  // degenerate q: eps = 1/phi - 1 makes the bound collapse to zero
  CHECK(ep::large_phi_q(0.8, 0.8, 0.25) == 0.0);
  CHECK(ep::large_phi_bound(0.8, 0.8, 0.25) == 0.0);
  CHECK(ep::large_phi_bound(0.7, 0.9, 1e-3) > 0.0);
}

TEST_CASE("small-phi bound is nonnegative across the sweep") {
  // The bound exceeds 0.5 for small phi (e.g. 0.7397 at phi = 0.05) and drops
  // below 0.5 only from phi ~ 0.25 on.
  for (int i = 0; i <= 40; ++i) {
    double phi = 0.05 + 0.01 * i;
    double b = ep::beta_bound(phi, phi, 1e-6);
    CHECK(b >= 0.0);
    if (phi >= 0.26) CHECK(b < 0.5);
  }
  CHECK(ep::beta_bound(0.05, 0.05, 1e-6) > 0.7);
}

TEST_CASE("discriminant identity") {
  // disc^2 == (1/phi_n - 1/phi_np1)^2 + 6/phi_n + 2/phi_np1 + 4 (1/phi_np1 - 2) eps - 7
  auto identity = [](double pn, double pn1, double eps) {
    double rn = 1.0 / pn, rn1 = 1.0 / pn1;
    return (rn - rn1) * (rn - rn1) + 6.0 * rn + 2.0 * rn1 + 4.0 * (rn1 - 2.0) * eps -
           7.0;
  };
  double eps_grid[] = {1e-6, 1e-3, 1e-2};
  for (double eps : eps_grid) {
    for (int i = 0; i < 200; ++i) {
      double pn = 0.05 + 0.4 * (i / 199.0);
      double pn1 = 0.05 + 0.4 * (((i * 7) % 200) / 199.0);
      if (!(1.0 / pn - 1.0 / pn1 + 3.0 > 0.0)) continue;
      double d = ep::beta_discriminant(pn, pn1, eps);
      CHECK(d * d == doctest::Approx(identity(pn, pn1, eps)).epsilon(1e-12));
    }
  }
}

TEST_CASE("domain preconditions") {
  CHECK_THROWS_AS(ep::beta_bound(0.6, 0.4, 1e-6), std::domain_error);
  CHECK_THROWS_AS(ep::beta_bound(0.4, 0.6, 1e-6), std::domain_error);
  // 1/phi_n - 1/phi_np1 + 3 <= 0
  CHECK_THROWS_AS(ep::beta_bound(0.45, 0.15, 1e-6), std::domain_error);
  CHECK_THROWS_AS(ep::large_phi_p(0.4, 0.9), std::domain_error);
  CHECK_THROWS_AS(ep::large_phi_q(0.9, 0.9, 0.2), std::domain_error);
}

TEST_CASE("emitted theta sits on the descent certificate") {
  ep::InertiaOptions opt;
  for (ep::Schedule s :
       {ep::Schedule::SubHalf, ep::Schedule::ConstHalf, ep::Schedule::NearOne}) {
    double theta_prev = 0.0;
    for (long n = 1; n <= 2000; ++n) {
      ep::InertiaParams ip = ep::inertia_at(s, n, theta_prev, opt);
      theta_prev = ip.theta;
      if (n == 1) {
        CHECK(ip.theta == 0.0);
        continue;
      }
      CHECK(ip.theta == ip.bound);
      double cert = ep::descent_certificate(ip.theta, ep::phi_value(s, n),
                                            ep::phi_value(s, n + 1), opt.eps);
      CHECK(cert >= -1e-12);
    }
  }
}

TEST_CASE("schedule exhaustion for near-one") {
  ep::InertiaOptions opt;
  opt.eps = 1e-3;
  CHECK_NOTHROW(ep::inertia_at(ep::Schedule::NearOne, 50, 0.0, opt));
  // phi_n = (n - 0.1)/n crosses 1 - eps once 0.1/n < eps
  CHECK_THROWS_AS(ep::inertia_at(ep::Schedule::NearOne, 200, 0.0, opt),
                  std::domain_error);
}

TEST_CASE("safety factor and monotone clamp") {
  ep::InertiaOptions opt;
  ep::InertiaParams full = ep::inertia_at(ep::Schedule::ConstHalf, 5, 0.0, opt);
  CHECK(full.theta == doctest::Approx((1.0 - opt.eps) / 3.0).epsilon(1e-15));
  opt.safety = 0.5;
  ep::InertiaParams half = ep::inertia_at(ep::Schedule::ConstHalf, 5, 0.0, opt);
  CHECK(half.theta == doctest::Approx(0.5 * full.theta).epsilon(1e-15));
  CHECK(half.bound == full.bound);

  // the near-one bounds decrease with n, so clamping pins theta at its peak
  ep::InertiaOptions clamped;
  clamped.monotone_clamp = true;
  double t2 = ep::inertia_at(ep::Schedule::NearOne, 2, 0.0, clamped).theta;
  ep::InertiaParams p3 = ep::inertia_at(ep::Schedule::NearOne, 3, t2, clamped);
  CHECK(p3.bound < t2);
  CHECK(p3.clamped);
  CHECK(p3.theta == t2);
  // without the clamp the emitted value tracks the bound and flags nothing
  ep::InertiaParams free3 = ep::inertia_at(ep::Schedule::NearOne, 3, t2, {});
  CHECK_FALSE(free3.clamped);
  CHECK(free3.theta == free3.bound);
}

TEST_CASE("online rule") {
  CHECK(ep::online_theta(0.9, 1.0, 0.0) == 0.9);
  // n = 9: eps_n = 100/(n+1)^2 = 1, displacement 10 -> 0.1
  CHECK(ep::online_theta(0.9, 1.0, 10.0) == doctest::Approx(0.1));
  CHECK(ep::online_theta(0.9, 1.0, 0.5) == 0.9);
  for (int n = 1; n <= 100; ++n) {
    double eps_n = 100.0 / ((n + 1.0) * (n + 1.0));
    double t = ep::online_theta(0.9, eps_n, 0.37);
    CHECK(t >= 0.0);
    CHECK(t <= 0.9);
  }
}

TEST_CASE("case tags") {
  CHECK(ep::inertia_at(ep::Schedule::SubHalf, 2, 0.0, {}).case_tag == "small_phi");
  CHECK(ep::inertia_at(ep::Schedule::ConstHalf, 2, 0.0, {}).case_tag == "half");
  CHECK(ep::inertia_at(ep::Schedule::NearOne, 2, 0.0, {}).case_tag == "large_phi");
}
