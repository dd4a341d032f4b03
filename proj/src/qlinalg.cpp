#include "eprsim/qlinalg.hpp"

#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

namespace eprsim {

namespace {
constexpr double kUnitGuard = 1e-9;  // admission tolerance for unit vectors
}

Direction::Direction(double x, double y, double z) : x_(x), y_(y), z_(z) {
  const double n2 = x * x + y * y + z * z;
  if (!std::isfinite(n2) || std::abs(n2 - 1.0) > kUnitGuard) {
    throw std::invalid_argument("Direction: vector is not unit length");
  }
  const double n = std::sqrt(n2);
  x_ /= n;
  y_ /= n;
  z_ /= n;
}

Direction Direction::from_polar(double theta, double phi) {
  const double st = std::sin(theta);
  return Direction(st * std::cos(phi), st * std::sin(phi), std::cos(theta));
}

Direction Direction::normalized(double x, double y, double z) {
  const double n = std::sqrt(x * x + y * y + z * z);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::invalid_argument("Direction: cannot normalize a zero vector");
  }
  return Direction(x / n, y / n, z / n);
}

double Direction::theta() const {
  double c = z_;
  if (c > 1.0) c = 1.0;
  if (c < -1.0) c = -1.0;
  return std::acos(c);
}

double Direction::phi() const { return std::atan2(y_, x_); }

Direction Direction::cross(const Direction& o) const {
  return Direction::normalized(y_ * o.z_ - z_ * o.y_, z_ * o.x_ - x_ * o.z_,
                               x_ * o.y_ - y_ * o.x_);
}

const Operator2& identity2() {
  static const Operator2 m = Operator2::Identity();
  return m;
}

const Operator4& identity4() {
  static const Operator4 m = Operator4::Identity();
  return m;
}

const Operator2& pauli_x() {
  static const Operator2 m = (Operator2() << 0, 1, 1, 0).finished();
  return m;
}

const Operator2& pauli_y() {
  static const Operator2 m =
      (Operator2() << 0, Complex(0, -1), Complex(0, 1), 0).finished();
  return m;
}

const Operator2& pauli_z() {
  static const Operator2 m = (Operator2() << 1, 0, 0, -1).finished();
  return m;
}

Operator2 pauli_dot(const Direction& n) {
  // The Direction constructor already guarantees unit length.
  return n.x() * pauli_x() + n.y() * pauli_y() + n.z() * pauli_z();
}

Operator4 tensor(const Operator2& a, const Operator2& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

Eigen::Vector4cd tensor_ket(const Spinor2& a, const Spinor2& b) {
  Eigen::Vector4cd v;
  v << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
  return v;
}

Operator2 projector(const Spinor2& psi) { return psi * psi.adjoint(); }

Operator2 partial_trace(const Operator4& m, Side over) {
  Operator2 r = Operator2::Zero();
  if (over == Side::Two) {
    // r[i][j] = sum_s m[2i+s][2j+s]
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int s = 0; s < 2; ++s) r(i, j) += m(2 * i + s, 2 * j + s);
  } else {
    // r[i][j] = sum_s m[2s+i][2s+j]
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int s = 0; s < 2; ++s) r(i, j) += m(2 * s + i, 2 * s + j);
  }
  return r;
}

namespace {

bool is_rank1_projector(const Operator2& p, double tol) {
  if (!is_hermitian(p, tol)) return false;
  if (std::abs(p.trace() - Complex(1.0, 0.0)) > tol) return false;
  return (p * p - p).norm() <= tol;
}

}  // namespace

Operator2 conditional_reduce(const Operator4& m, const Operator2& proj,
                             Side on) {
  if (!is_rank1_projector(proj, kTol)) {
    throw std::invalid_argument(
        "conditional_reduce: conditioning operator is not a rank-1 projector");
  }
  const Operator4 applied = (on == Side::Two)
                                ? Operator4(tensor(identity2(), proj) * m)
                                : Operator4(tensor(proj, identity2()) * m);
  return partial_trace(applied, on);
}

bool is_hermitian(const Operator2& m, double tol) {
  return (m - m.adjoint().eval()).norm() <= tol;
}

bool is_hermitian(const Operator4& m, double tol) {
  return (m - m.adjoint().eval()).norm() <= tol;
}

namespace {

template <typename Mat>
bool density_impl(const Mat& m, double expected_trace, double tol) {
  if (!is_hermitian(m, tol)) return false;
  if (std::abs(m.trace() - Complex(expected_trace, 0.0)) > tol) return false;
  Eigen::SelfAdjointEigenSolver<Mat> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() >= -tol;
}

}  // namespace

bool is_density_operator(const Operator2& m, double expected_trace,
                         double tol) {
  return density_impl(m, expected_trace, tol);
}

bool is_density_operator(const Operator4& m, double expected_trace,
                         double tol) {
  return density_impl(m, expected_trace, tol);
}

void require_density_operator(const Operator2& m, double expected_trace,
                              double tol) {
  if (!is_density_operator(m, expected_trace, tol)) {
    throw std::invalid_argument("operator fails the density checks");
  }
}

void require_density_operator(const Operator4& m, double expected_trace,
                              double tol) {
  if (!is_density_operator(m, expected_trace, tol)) {
    throw std::invalid_argument("operator fails the density checks");
  }
}

}  // namespace eprsim
