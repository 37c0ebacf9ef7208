#include "epsolve/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace ep {

Vector project(const Box& s, const Vector& x) {
  return x.cwiseMax(s.lo).cwiseMin(s.hi);
}

Vector project(const Ball& s, const Vector& x) {
  Vector d = x - s.center;
  double n = d.norm();
  if (n <= s.radius) return x;
  return s.center + d * (s.radius / n);
}

Vector project(const HalfSpace& s, const Vector& x) {
  double a2 = s.a.squaredNorm();
  if (a2 == 0.0) return x;
  double v = s.a.dot(x - s.p);
  if (v <= 0.0) return x;
  return x - (v / a2) * s.a;
}

Vector project(const FeasibleSet& s, const Vector& x) {
  return std::visit([&](const auto& c) { return project(c, x); }, s);
}

bool contains(const FeasibleSet& s, const Vector& x, double slack) {
  if (const auto* b = std::get_if<Box>(&s)) {
    return (x.array() >= b->lo.array() - slack).all() &&
           (x.array() <= b->hi.array() + slack).all();
  }
  if (const auto* b = std::get_if<Ball>(&s)) {
    return (x - b->center).norm() <= b->radius + slack;
  }
  const auto& h = std::get<HalfSpace>(s);
  double a2 = h.a.squaredNorm();
  if (a2 == 0.0) return true;
  double scale = std::max(1.0, h.a.norm() * (x - h.p).norm());
  return h.a.dot(x - h.p) <= slack * scale;
}

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Matrix g = m.transpose() * m;
  Eigen::Index n = g.rows();
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = 1.0 + 1e-3 * static_cast<double>(i);
  v.normalize();
  double prev = 0.0;
  for (int k = 0; k < 100000; ++k) {
    Vector gv = g * v;
    double ray = v.dot(gv);
    if (ray <= 0.0) return 0.0;
    double sigma = std::sqrt(ray);
    if (k > 0 && std::abs(sigma - prev) <= 1e-10 * std::max(1.0, sigma)) return sigma;
    prev = sigma;
    double nn = gv.norm();
    if (nn == 0.0) return 0.0;
    v = gv / nn;
  }
  return prev;
}

Vector Rng::vector(Eigen::Index n, double lo, double hi) {
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = uniform(lo, hi);
  return v;
}

Matrix Rng::matrix(Eigen::Index rows, Eigen::Index cols, double lo, double hi) {
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = uniform(lo, hi);
  return m;
}

nlohmann::json vec_to_json(const Vector& v) {
  nlohmann::json j = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(v[i]);
  return j;
}

Vector vec_from_json(const nlohmann::json& j) {
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = j.at(i).get<double>();
  return v;
}

nlohmann::json mat_to_json(const Matrix& m) {
  nlohmann::json j = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) j.push_back(vec_to_json(m.row(r)));
  return j;
}

Matrix mat_from_json(const nlohmann::json& j) {
  auto rows = static_cast<Eigen::Index>(j.size());
  if (rows == 0) return Matrix(0, 0);
  auto cols = static_cast<Eigen::Index>(j.at(0).size());
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (static_cast<Eigen::Index>(j.at(r).size()) != cols)
      throw std::invalid_argument("ragged matrix");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = j.at(r).at(c).get<double>();
  }
  return m;
}

nlohmann::json set_to_json(const FeasibleSet& s) {
  if (const auto* b = std::get_if<Box>(&s))
    return {{"box", {{"lo", vec_to_json(b->lo)}, {"hi", vec_to_json(b->hi)}}}};
  if (const auto* b = std::get_if<Ball>(&s))
    return {{"ball", {{"center", vec_to_json(b->center)}, {"radius", b->radius}}}};
  const auto& h = std::get<HalfSpace>(s);
  return {{"halfspace", {{"a", vec_to_json(h.a)}, {"p", vec_to_json(h.p)}}}};
}

FeasibleSet set_from_json(const nlohmann::json& j) {
  if (j.contains("box"))
    return Box{vec_from_json(j["box"]["lo"]), vec_from_json(j["box"]["hi"])};
  if (j.contains("ball"))
    return Ball{vec_from_json(j["ball"]["center"]), j["ball"]["radius"].get<double>()};
  if (j.contains("halfspace"))
    return HalfSpace{vec_from_json(j["halfspace"]["a"]), vec_from_json(j["halfspace"]["p"])};
  throw std::invalid_argument("unknown feasible set kind");
}

}  // namespace ep
