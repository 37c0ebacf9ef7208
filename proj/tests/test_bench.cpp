#include <stdexcept>
#include <sstream>

#include "doctest.h"
#include "epsolve/bench.hpp"

TEST_CASE("benchmark parameterizations") {
  ep::EquilibriumProblem ball = ep::make_problem(ep::make_ball_instance(1));
  ep::BenchOptions opt;

  ep::SolverConfig rise = ep::algorithm_config("rise_half", ball, opt);
  CHECK(rise.lambda1 == 0.1);
  CHECK(rise.mu == 0.5);
  CHECK(rise.schedule == ep::Schedule::ConstHalf);
  CHECK(rise.inertia.eps == 1e-6);

  // fixed step 0.9 * min(1/(2 a1), 1/(2 a2)) with a1 = a2 = 5/2
  ep::SolverConfig eg = ep::algorithm_config("eg_fixed", ball, opt);
  CHECK(eg.lambda1 == doctest::Approx(0.18).epsilon(1e-15));

  // sigma = 0.9 * min{1, a1/2, a2/2} = 0.9, mu = 0.9 * sigma
  ep::SolverConfig seg = ep::algorithm_config("seg_adaptive", ball, opt);
  CHECK(seg.lambda1 == 0.1);
  CHECK(seg.mu == doctest::Approx(0.81).epsilon(1e-15));

  opt.lambda1 = 0.05;
  opt.mu = 0.3;
  ep::SolverConfig tuned = ep::algorithm_config("rise_near_one", ball, opt);
  CHECK(tuned.lambda1 == 0.05);
  CHECK(tuned.mu == 0.3);

  CHECK_THROWS_AS(ep::algorithm_config("nope", ball, opt), std::invalid_argument);
}

TEST_CASE("experiment over the fixed cases") {
  ep::ExperimentConfig ec;
  ec.problem = ep::BallSpec{1};
  ec.algorithms = {"rise_near_one", "eg_fixed"};
  ec.options.measure_time = false;
  ep::SummaryTable t = ep::run_experiment(ec);
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[0].algorithm == "rise_near_one");
  CHECK(t.rows[0].case_label == "case1");
  CHECK(t.rows[0].converged == 1);
  CHECK(t.rows[0].mean_iter == 45.0);
  CHECK(t.rows[1].mean_iter == 46.0);
}

TEST_CASE("experiment over generated instances uses one seed per replication") {
  ep::ExperimentConfig ec;
  ec.problem = ep::NashSpec{5};
  ec.algorithms = {"rise_near_one"};
  ec.replications = 3;
  ec.seed = 11;
  ec.options.measure_time = false;
  ep::SummaryTable t = ep::run_experiment(ec);
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0].case_label == "N=5");
  CHECK(t.rows[0].converged == 3);
  CHECK(t.rows[0].replications == 3);
  CHECK(t.rows[0].mean_iter > 0.0);

  // replication r solves the instance generated from seed + r
  double iter_sum = 0.0;
  for (std::uint64_t s = 11; s <= 13; ++s) {
    ep::NashCournotInstance inst = ep::generate_nash_cournot(5, s);
    ep::LoadedProblem lp{ep::make_problem(inst), inst.x0, inst.x1, "N=5"};
    ep::RunResult res = ep::run_algorithm(lp, "rise_near_one", ec.options);
    REQUIRE(res.stop_reason == ep::StopReason::Converged);
    iter_sum += static_cast<double>(res.iterations);
  }
  CHECK(t.rows[0].mean_iter == doctest::Approx(iter_sum / 3.0).epsilon(1e-15));
}

TEST_CASE("summary csv layout") {
  ep::SummaryTable t;
  t.rows.push_back({"rise_half", "case2", 57.0, 0.25, 1, 1});
  std::ostringstream os;
  ep::write_summary_csv(os, t);
  CHECK(os.str() ==
        "algorithm,case,mean_iter,mean_ms,converged,replications\n"
        "rise_half,case2,57,0.25,1,1\n");
}

TEST_CASE("plot data blocks") {
  ep::BallInstance inst = ep::make_ball_instance(1);
  ep::LoadedProblem lp{ep::make_problem(inst), inst.x0, inst.x1, "case1"};
  ep::BenchOptions opt;
  opt.measure_time = false;
  std::vector<std::pair<std::string, ep::RunResult>> series;
  series.emplace_back("rise_near_one", ep::run_algorithm(lp, "rise_near_one", opt));
  series.emplace_back("eg_fixed", ep::run_algorithm(lp, "eg_fixed", opt));
  std::ostringstream os;
  ep::emit_plot_data(os, series);
  std::string s = os.str();
  CHECK(s.rfind("# rise_near_one\n1 ", 0) == 0);
  CHECK(s.find("\n\n# eg_fixed\n") != std::string::npos);
  // two-column numeric rows
  std::istringstream in(s);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    long n;
    double tol;
    bool parsed = static_cast<bool>(ls >> n >> tol);
    REQUIRE(parsed);
    ++rows;
  }
  CHECK(rows == 45 + 46);
}

TEST_CASE("reference solution drives the residual to the known solution") {
  ep::BallInstance inst = ep::make_ball_instance(2);
  ep::LoadedProblem lp{ep::make_problem(inst), inst.x0, inst.x1, "case2"};
  ep::Vector sol = ep::compute_reference_solution(lp, 1e-9);
  CHECK(sol.norm() <= 1e-7);
}
