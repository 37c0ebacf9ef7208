#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <variant>

#include "json.hpp"

namespace ep {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

struct Box {
  Vector lo, hi;
};

struct Ball {
  Vector center;
  double radius = 1.0;
};

// {x : <a, x - p> <= 0}; a == 0 denotes the whole space.
struct HalfSpace {
  Vector a, p;
};

using FeasibleSet = std::variant<Box, Ball, HalfSpace>;

Vector project(const Box& s, const Vector& x);
Vector project(const Ball& s, const Vector& x);
Vector project(const HalfSpace& s, const Vector& x);
Vector project(const FeasibleSet& s, const Vector& x);

bool contains(const FeasibleSet& s, const Vector& x, double slack = 1e-12);

// Largest singular value by power iteration on m^T m, relative tolerance 1e-10.
double spectral_norm(const Matrix& m);

// mt19937_64 with an explicit 53-bit mantissa map; std::uniform_real_distribution
// is implementation-defined, which would break cross-toolchain reproducibility.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo, double hi) {
    double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  }

  Vector vector(Eigen::Index n, double lo, double hi);
  Matrix matrix(Eigen::Index rows, Eigen::Index cols, double lo, double hi);

 private:
  std::mt19937_64 eng_;
};

nlohmann::json vec_to_json(const Vector& v);
Vector vec_from_json(const nlohmann::json& j);
nlohmann::json mat_to_json(const Matrix& m);
Matrix mat_from_json(const nlohmann::json& j);
nlohmann::json set_to_json(const FeasibleSet& s);
FeasibleSet set_from_json(const nlohmann::json& j);

}  // namespace ep
