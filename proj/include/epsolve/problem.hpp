#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "epsolve/linalg.hpp"

namespace ep {

enum class ProxStructure { LinearInY, QuadraticInY };

// F(x, y) = <P x + Q y + q, y - x>
struct QuadraticData {
  Matrix P, Q;
  Vector q;
  double q_norm = 0.0;  // spectral norm of Q, cached for prox step sizes
};

struct EquilibriumProblem {
  FeasibleSet feasible_set;
  std::function<double(const Vector&, const Vector&)> eval;
  std::function<Vector(const Vector&, const Vector&)> partial_subgradient;
  double lipschitz_a1 = 0.0;
  double lipschitz_a2 = 0.0;
  ProxStructure prox_structure = ProxStructure::LinearInY;
  std::optional<Vector> known_solution;
  std::optional<QuadraticData> quad;
};

struct NashCournotInstance {
  int N = 0;
  std::uint64_t seed = 0;
  QuadraticData data;
  Vector x0, x1;
  std::optional<Vector> solution;
};

NashCournotInstance generate_nash_cournot(int N, std::uint64_t seed);
EquilibriumProblem make_problem(const NashCournotInstance& inst);

inline constexpr int kBallDim = 50;

// (scale, scale*ratio, scale*ratio^2, ...) truncated to dim entries
Vector geometric_vector(double scale, double ratio, int dim = kBallDim);

struct BallInstance {
  int dim = kBallDim;
  int case_id = 1;
  Vector x0, x1;
};

BallInstance make_ball_instance(int case_id, int dim = kBallDim);
EquilibriumProblem make_problem(const BallInstance& inst);

struct ValidationReport {
  int samples = 0;
  double max_diagonal = 0.0;
  int pseudomonotone_violations = 0;
  int lipschitz_violations = 0;
  double worst_lipschitz_slack = 0.0;
  bool ok() const {
    return pseudomonotone_violations == 0 && lipschitz_violations == 0;
  }
};

ValidationReport validate_assumptions(const EquilibriumProblem& prob, int samples,
                                      std::uint64_t seed);

struct LoadedProblem {
  EquilibriumProblem problem;
  Vector x0, x1;
  std::string label;
};

nlohmann::json instance_to_json(const NashCournotInstance& inst);
nlohmann::json instance_to_json(const BallInstance& inst);
LoadedProblem load_problem(const nlohmann::json& j);
LoadedProblem load_problem_file(const std::string& path);

}  // namespace ep
