#pragma once

// Minimal complex linear algebra for one- and two-spin operators:
// Pauli algebra, tensor products, traces, partial and conditional traces,
// projectors, and density-operator validity checks. Everything here is a
// pure function over immutable values.

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace eprsim {

using Complex = std::complex<double>;
using Spinor2 = Eigen::Vector2cd;    // single-spin ket in the {|+z>, |-z>} basis
using Operator2 = Eigen::Matrix2cd;  // single-spin operator
using Operator4 = Eigen::Matrix4cd;  // pair operator in the |s1>|s2> basis

// Absolute tolerance for every operator identity in this library. The math
// is exact in exact arithmetic; 1e-12 leaves headroom over double rounding.
// Statistical tolerances live with the Monte Carlo estimators, not here.
inline constexpr double kTol = 1e-12;

// Basis order for Operator4 / pair kets, fixed once for the whole library:
//   index 0: |+z>|+z>,  1: |+z>|-z>,  2: |-z>|+z>,  3: |-z>|-z>
// i.e. row/col index = 2*s1 + s2 with s = 0 for +z, 1 for -z.

enum class Side { One = 1, Two = 2 };

/// A unit 3-vector: a filter orientation or a quantization axis.
/// The constructor accepts anything unit to 1e-9 and renormalizes, so the
/// stored components satisfy x^2 + y^2 + z^2 = 1 to machine precision.
class Direction {
 public:
  Direction(double x, double y, double z);

  /// Unit vector from polar angles: (sin t cos p, sin t sin p, cos t).
  static Direction from_polar(double theta, double phi);

  /// Normalizes an arbitrary nonzero vector.
  static Direction normalized(double x, double y, double z);

  double x() const { return x_; }
  double y() const { return y_; }
  double z() const { return z_; }

  double dot(const Direction& other) const {
    return x_ * other.x_ + y_ * other.y_ + z_ * other.z_;
  }

  /// Polar angle from +z, in [0, pi].
  double theta() const;
  /// Azimuth in (-pi, pi]; 0 when the direction is +-z.
  double phi() const;

  Direction cross(const Direction& other) const;

 private:
  double x_, y_, z_;
};

inline double angle_between(const Direction& a, const Direction& b) {
  double c = a.dot(b);
  if (c > 1.0) c = 1.0;
  if (c < -1.0) c = -1.0;
  return std::acos(c);
}

const Operator2& identity2();
const Operator4& identity4();
const Operator2& pauli_x();
const Operator2& pauli_y();
const Operator2& pauli_z();

/// n . sigma for unit n: Hermitian, traceless, squares to the identity.
/// Throws std::invalid_argument on a non-unit n (checked to 1e-9).
Operator2 pauli_dot(const Direction& n);

/// Kronecker product in the fixed basis order; trace(tensor(A,B)) =
/// trace(A) * trace(B).
Operator4 tensor(const Operator2& a, const Operator2& b);

/// Pair ket |a>|b> as a 4-vector in the fixed basis order.
Eigen::Vector4cd tensor_ket(const Spinor2& a, const Spinor2& b);

/// |psi><psi| for a single-spin ket.
Operator2 projector(const Spinor2& psi);

/// Trace out one side of a pair operator; linear, trace preserving.
Operator2 partial_trace(const Operator4& m, Side over);

/// Tr_side{ (P on side) M }: the unnormalized conditional reduction of M
/// given that `side` projects onto the rank-1 projector P. The trace of the
/// result is the probability weight of that branch.
/// Throws std::invalid_argument unless P is a rank-1 projector.
Operator2 conditional_reduce(const Operator4& m, const Operator2& proj, Side on);

bool is_hermitian(const Operator2& m, double tol = kTol);
bool is_hermitian(const Operator4& m, double tol = kTol);

/// Hermitian + trace == expected_trace + eigenvalues >= -tol.
bool is_density_operator(const Operator2& m, double expected_trace = 1.0,
                         double tol = kTol);
bool is_density_operator(const Operator4& m, double expected_trace = 1.0,
                         double tol = kTol);

/// Throwing forms of the density checks, used by state constructors.
void require_density_operator(const Operator2& m, double expected_trace = 1.0,
                              double tol = kTol);
void require_density_operator(const Operator4& m, double expected_trace = 1.0,
                              double tol = kTol);

inline double frobenius_distance(const Operator2& a, const Operator2& b) {
  return (a - b).norm();
}
inline double frobenius_distance(const Operator4& a, const Operator4& b) {
  return (a - b).norm();
}

}  // namespace eprsim
