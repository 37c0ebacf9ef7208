#include "epsolve/problem.hpp"

#include <fstream>
#include <stdexcept>

namespace ep {

NashCournotInstance generate_nash_cournot(int N, std::uint64_t seed) {
  if (N <= 0) throw std::invalid_argument("N must be positive");
  Rng rng(seed);
  Matrix A = rng.matrix(N, N, -1.0, 1.0);
  Matrix B = rng.matrix(N, N, -1.0, 1.0);
  NashCournotInstance inst;
  inst.N = N;
  inst.seed = seed;
  inst.data.Q = (A.transpose() * A) / static_cast<double>(N);
  inst.data.P = inst.data.Q + (B.transpose() * B) / static_cast<double>(N);
  double bound = static_cast<double>(N);
  inst.data.q = rng.vector(N, -bound, bound);
  inst.x0 = rng.vector(N, -bound, bound);
  inst.x1 = rng.vector(N, -bound, bound);
  inst.data.q_norm = spectral_norm(inst.data.Q);
  return inst;
}

EquilibriumProblem make_problem(const NashCournotInstance& inst) {
  EquilibriumProblem prob;
  int N = inst.N;
  prob.feasible_set = Box{Vector::Constant(N, -5.0), Vector::Constant(N, 5.0)};
  QuadraticData d = inst.data;
  prob.eval = [d](const Vector& x, const Vector& y) {
    return (d.P * x + d.Q * y + d.q).dot(y - x);
  };
  prob.partial_subgradient = [d](const Vector& x, const Vector& y) -> Vector {
    return d.P * x + d.q + 2.0 * (d.Q * y) - d.Q * x;
  };
  double a = 0.5 * spectral_norm(inst.data.P - inst.data.Q);
  prob.lipschitz_a1 = a;
  prob.lipschitz_a2 = a;
  prob.prox_structure = ProxStructure::QuadraticInY;
  prob.quad = std::move(d);
  if (inst.solution) prob.known_solution = *inst.solution;
  return prob;
}

Vector geometric_vector(double scale, double ratio, int dim) {
  Vector v(dim);
  double t = scale;
  for (int i = 0; i < dim; ++i) {
    v[i] = t;
    t *= ratio;
  }
  return v;
}

BallInstance make_ball_instance(int case_id, int dim) {
  BallInstance inst;
  inst.dim = dim;
  inst.case_id = case_id;
  switch (case_id) {
    case 1:
      inst.x1 = geometric_vector(5.0 / 7.0, 1.0 / 5.0, dim);
      inst.x0 = geometric_vector(1.0 / 2.0, 1.0 / 3.0, dim);
      break;
    case 2:
      inst.x1 = geometric_vector(1.0 / 2.0, 1.0 / 3.0, dim);
      inst.x0 = geometric_vector(1.0 / 3.0, 1.0 / 3.0, dim);
      break;
    case 3:
      inst.x1 = geometric_vector(1.0 / 3.0, 1.0 / 3.0, dim);
      inst.x0 = geometric_vector(2.0 / 5.0, 1.0 / 2.0, dim);
      break;
    default:
      throw std::invalid_argument("case_id must be 1, 2, or 3");
  }
  return inst;
}

EquilibriumProblem make_problem(const BallInstance& inst) {
  EquilibriumProblem prob;
  prob.feasible_set = Ball{Vector::Zero(inst.dim), 1.0};
  prob.eval = [](const Vector& x, const Vector& y) {
    return (3.0 - x.norm()) * (x.dot(y) - x.squaredNorm());
  };
  prob.partial_subgradient = [](const Vector& x, const Vector&) -> Vector {
    return (3.0 - x.norm()) * x;
  };
  prob.lipschitz_a1 = 2.5;
  prob.lipschitz_a2 = 2.5;
  prob.prox_structure = ProxStructure::LinearInY;
  prob.known_solution = Vector::Zero(inst.dim);
  return prob;
}

namespace {

Vector sample_point(const FeasibleSet& s, Rng& rng) {
  if (const auto* b = std::get_if<Box>(&s)) {
    Vector x(b->lo.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = rng.uniform(b->lo[i], b->hi[i]);
    return x;
  }
  if (const auto* b = std::get_if<Ball>(&s)) {
    Eigen::Index n = b->center.size();
    Vector d = rng.vector(n, -1.0, 1.0);
    double nn = d.norm();
    if (nn == 0.0) return b->center;
    double t = rng.uniform(0.0, 1.0);
    return b->center + d * (b->radius * t / nn);
  }
  const auto& h = std::get<HalfSpace>(s);
  return project(h, rng.vector(h.p.size(), -5.0, 5.0));
}

}  // namespace

ValidationReport validate_assumptions(const EquilibriumProblem& prob, int samples,
                                      std::uint64_t seed) {
  ValidationReport rep;
  rep.samples = samples;
  Rng rng(seed);
  for (int k = 0; k < samples; ++k) {
    Vector x = sample_point(prob.feasible_set, rng);
    Vector y = sample_point(prob.feasible_set, rng);
    Vector w = sample_point(prob.feasible_set, rng);
    rep.max_diagonal = std::max(rep.max_diagonal, std::abs(prob.eval(x, x)));
    if (prob.eval(x, y) >= 0.0 && prob.eval(y, x) > 1e-10)
      ++rep.pseudomonotone_violations;
    double slack = prob.eval(x, y) + prob.eval(y, w) - prob.eval(x, w) +
                   prob.lipschitz_a1 * (x - y).squaredNorm() +
                   prob.lipschitz_a2 * (y - w).squaredNorm();
    rep.worst_lipschitz_slack = std::min(rep.worst_lipschitz_slack, slack);
    if (slack < -1e-10) ++rep.lipschitz_violations;
  }
  return rep;
}

nlohmann::json instance_to_json(const NashCournotInstance& inst) {
  nlohmann::json j;
  j["kind"] = "nash_cournot";
  j["N"] = inst.N;
  j["seed"] = inst.seed;
  j["P"] = mat_to_json(inst.data.P);
  j["Q"] = mat_to_json(inst.data.Q);
  j["q"] = vec_to_json(inst.data.q);
  j["x0"] = vec_to_json(inst.x0);
  j["x1"] = vec_to_json(inst.x1);
  if (inst.solution) j["solution"] = vec_to_json(*inst.solution);
  return j;
}

nlohmann::json instance_to_json(const BallInstance& inst) {
  nlohmann::json j;
  j["kind"] = "ball_ep";
  j["dim"] = inst.dim;
  j["case"] = inst.case_id;
  return j;
}

LoadedProblem load_problem(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  LoadedProblem lp;
  if (kind == "nash_cournot") {
    NashCournotInstance inst;
    inst.N = j.at("N").get<int>();
    inst.seed = j.value("seed", std::uint64_t{0});
    inst.data.P = mat_from_json(j.at("P"));
    inst.data.Q = mat_from_json(j.at("Q"));
    inst.data.q = vec_from_json(j.at("q"));
    inst.data.q_norm = spectral_norm(inst.data.Q);
    if (j.contains("x0")) {
      inst.x0 = vec_from_json(j.at("x0"));
      inst.x1 = vec_from_json(j.at("x1"));
    } else {
      NashCournotInstance regen = generate_nash_cournot(inst.N, inst.seed);
      inst.x0 = regen.x0;
      inst.x1 = regen.x1;
    }
    if (j.contains("solution")) inst.solution = vec_from_json(j.at("solution"));
    lp.problem = make_problem(inst);
    lp.x0 = inst.x0;
    lp.x1 = inst.x1;
    lp.label = "N=" + std::to_string(inst.N) + ",seed=" + std::to_string(inst.seed);
    return lp;
  }
  if (kind == "ball_ep") {
    BallInstance inst = make_ball_instance(j.at("case").get<int>(),
                                           j.value("dim", kBallDim));
    lp.problem = make_problem(inst);
    lp.x0 = inst.x0;
    lp.x1 = inst.x1;
    lp.label = "case" + std::to_string(inst.case_id);
    return lp;
  }
  throw std::invalid_argument("unknown problem kind: " + kind);
}

LoadedProblem load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open problem file: " + path);
  nlohmann::json j;
  in >> j;
  return load_problem(j);
}

}  // namespace ep
