#include <stdexcept>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "epsolve/bench.hpp"

namespace {

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  return f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equilibrium problem solver benchmark"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("generate", "write a problem instance file");
  std::string gen_kind, gen_out;
  int gen_n = 20, gen_case = 1, gen_dim = ep::kBallDim;
  std::uint64_t gen_seed = 1;
  bool gen_solution = false;
  gen->add_option("--kind", gen_kind, "nash_cournot | ball_ep")->required();
  gen->add_option("--N", gen_n, "number of players");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--case", gen_case, "starting-point case (1-3)");
  gen->add_option("--dim", gen_dim, "truncation dimension");
  gen->add_flag("--with-solution", gen_solution, "embed a high-accuracy solution");
  gen->add_option("--out", gen_out, "output file")->required();

  auto* val = app.add_subcommand("validate", "sample-check problem assumptions");
  std::string val_file;
  int val_samples = 10000;
  std::uint64_t val_seed = 1;
  val->add_option("problem", val_file, "problem instance file")->required();
  val->add_option("--samples", val_samples, "sample triples");
  val->add_option("--seed", val_seed, "sampler seed");

  auto* run = app.add_subcommand("run", "run one algorithm on one problem");
  std::string run_file, run_alg = "rise", run_phi = "near_one";
  std::string run_mode = "tol", run_trace, run_summary;
  ep::BenchOptions run_opt;
  double run_lambda1 = -1, run_mu = -1, run_eps = -1;
  bool run_clamp = false, run_gamma = false, run_no_timing = false;
  run->add_option("problem", run_file, "problem instance file")->required();
  run->add_option("--alg", run_alg, "rise | eg_fixed | seg_adaptive | rise_<phi>");
  run->add_option("--phi", run_phi, "sub_half | half | near_one");
  run->add_option("--tol", run_opt.stop_tol, "stopping tolerance");
  run->add_option("--max-iter", run_opt.max_iter, "iteration cap");
  run->add_option("--stop-mode", run_mode, "tol | tol_and_step");
  run->add_option("--lambda1", run_lambda1, "initial step size");
  run->add_option("--mu", run_mu, "step-size contraction factor");
  run->add_option("--eps", run_eps, "inertia margin");
  run->add_option("--safety", run_opt.safety, "inertia safety factor");
  run->add_flag("--theta-clamp", run_clamp, "keep theta nondecreasing");
  run->add_flag("--gamma", run_gamma, "record the descent diagnostic");
  run->add_flag("--no-timing", run_no_timing, "write zero timings (reproducible traces)");
  run->add_option("--trace", run_trace, "per-iteration CSV output");
  run->add_option("--summary", run_summary, "JSON summary output");

  auto* plot = app.add_subcommand("plotdata", "residual-vs-iteration series");
  std::string plot_file, plot_algs, plot_out;
  ep::BenchOptions plot_opt;
  plot->add_option("problem", plot_file, "problem instance file")->required();
  plot->add_option("--algs", plot_algs, "comma-separated algorithm names");
  plot->add_option("--tol", plot_opt.stop_tol, "stopping tolerance");
  plot->add_option("--max-iter", plot_opt.max_iter, "iteration cap");
  plot->add_option("--out", plot_out, "output file (default stdout)");

  auto* tab = app.add_subcommand("table", "replicate the benchmark summaries");
  int tab_which = 2, tab_reps = 10;
  std::uint64_t tab_seed = 1;
  std::string tab_nlist = "20,50,100", tab_out;
  ep::BenchOptions tab_opt;
  tab->add_option("--which", tab_which, "1 = generated instances, 2 = fixed cases")
      ->check(CLI::IsMember({1, 2}));
  tab->add_option("--reps", tab_reps, "replications per instance size");
  tab->add_option("--seed", tab_seed, "base seed (replication r uses seed + r)");
  tab->add_option("--N-list", tab_nlist, "comma-separated instance sizes");
  tab->add_option("--tol", tab_opt.stop_tol, "stopping tolerance");
  tab->add_option("--max-iter", tab_opt.max_iter, "iteration cap");
  tab->add_option("--out", tab_out, "output directory (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (gen->parsed()) {
      nlohmann::json j;
      if (gen_kind == "nash_cournot") {
        ep::NashCournotInstance inst = ep::generate_nash_cournot(gen_n, gen_seed);
        if (gen_solution) {
          ep::LoadedProblem lp{ep::make_problem(inst), inst.x0, inst.x1, ""};
          inst.solution = ep::compute_reference_solution(lp);
        }
        j = ep::instance_to_json(inst);
      } else if (gen_kind == "ball_ep") {
        j = ep::instance_to_json(ep::make_ball_instance(gen_case, gen_dim));
      } else {
        std::cerr << "unknown kind: " << gen_kind << '\n';
        return 1;
      }
      auto f = open_out(gen_out);
      f << j.dump(2) << '\n';
      return 0;
    }

    if (val->parsed()) {
      ep::LoadedProblem lp = ep::load_problem_file(val_file);
      ep::ValidationReport rep =
          ep::validate_assumptions(lp.problem, val_samples, val_seed);
      std::cout << "samples: " << rep.samples << '\n'
                << "max |F(x,x)|: " << rep.max_diagonal << '\n'
                << "pseudomonotonicity violations: " << rep.pseudomonotone_violations
                << '\n'
                << "lipschitz-type violations: " << rep.lipschitz_violations << '\n'
                << "worst lipschitz slack: " << rep.worst_lipschitz_slack << '\n';
      return rep.ok() ? 0 : 2;
    }

    if (run->parsed()) {
      ep::LoadedProblem lp = ep::load_problem_file(run_file);
      std::string alg = run_alg == "rise" ? "rise_" + run_phi : run_alg;
      if (run_mode == "tol_and_step")
        run_opt.stop_mode = ep::StopMode::TolAndStep;
      else if (run_mode != "tol") {
        std::cerr << "unknown stop mode: " << run_mode << '\n';
        return 1;
      }
      run_opt.monotone_clamp = run_clamp;
      run_opt.record_gamma = run_gamma;
      run_opt.measure_time = !run_no_timing;
      if (run_lambda1 > 0) run_opt.lambda1 = run_lambda1;
      if (run_mu > 0) run_opt.mu = run_mu;
      if (run_eps > 0) run_opt.eps = run_eps;
      if (run_gamma && !lp.problem.known_solution) {
        std::cerr << "--gamma needs a problem with a known solution\n";
        return 1;
      }
      ep::RunResult res = ep::run_algorithm(lp, alg, run_opt);
      if (!run_trace.empty()) {
        auto f = open_out(run_trace);
        ep::write_trace_csv(f, res);
      }
      if (!run_summary.empty()) {
        auto f = open_out(run_summary);
        ep::write_summary_json(f, res, alg);
      }
      std::cout << "algorithm=" << alg << " problem=" << lp.label
                << " stop=" << ep::stop_reason_name(res.stop_reason)
                << " iterations=" << res.iterations
                << " time_ms=" << res.total_time_ms << '\n';
      return res.stop_reason == ep::StopReason::InnerFailure ? 3 : 0;
    }

    if (plot->parsed()) {
      ep::LoadedProblem lp = ep::load_problem_file(plot_file);
      std::vector<std::string> algs =
          plot_algs.empty() ? ep::known_algorithms() : split_csv(plot_algs);
      std::vector<std::pair<std::string, ep::RunResult>> series;
      for (const auto& a : algs) series.emplace_back(a, ep::run_algorithm(lp, a, plot_opt));
      if (plot_out.empty()) {
        ep::emit_plot_data(std::cout, series);
      } else {
        auto f = open_out(plot_out);
        ep::emit_plot_data(f, series);
      }
      for (const auto& [name, res] : series)
        if (res.stop_reason == ep::StopReason::InnerFailure) return 3;
      return 0;
    }

    if (tab->parsed()) {
      ep::SummaryTable all;
      if (tab_which == 2) {
        for (int c = 1; c <= 3; ++c) {
          ep::ExperimentConfig ec;
          ec.problem = ep::BallSpec{c};
          ec.algorithms = ep::known_algorithms();
          ec.replications = 1;
          ec.options = tab_opt;
          ep::SummaryTable t = ep::run_experiment(ec);
          all.rows.insert(all.rows.end(), t.rows.begin(), t.rows.end());
        }
      } else {
        for (const auto& ns : split_csv(tab_nlist)) {
          ep::ExperimentConfig ec;
          ec.problem = ep::NashSpec{std::stoi(ns)};
          ec.algorithms = ep::known_algorithms();
          ec.replications = tab_reps;
          ec.seed = tab_seed;
          ec.options = tab_opt;
          ep::SummaryTable t = ep::run_experiment(ec);
          all.rows.insert(all.rows.end(), t.rows.begin(), t.rows.end());
        }
      }
      if (tab_out.empty()) {
        ep::write_summary_csv(std::cout, all);
      } else {
        std::filesystem::create_directories(tab_out);
        auto f = open_out(tab_out + "/summary.csv");
        ep::write_summary_csv(f, all);
      }
      return 0;
    }
  } catch (const ep::ProxFailure& e) {
    std::cerr << "inner solver failure: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
