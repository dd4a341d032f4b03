#include "eprsim/states.hpp"

#include <cmath>

namespace eprsim {

Spinor2 ket_plus(const Direction& axis) {
  const double t = axis.theta();
  const double p = axis.phi();
  Spinor2 k;
  k << Complex(std::cos(t / 2), 0),
      std::sin(t / 2) * std::exp(Complex(0, p));
  return k;
}

Spinor2 ket_minus(const Direction& axis) {
  const double t = axis.theta();
  const double p = axis.phi();
  Spinor2 k;
  k << -std::sin(t / 2) * std::exp(Complex(0, -p)),
      Complex(std::cos(t / 2), 0);
  return k;
}

PairState rho_epr() {
  static const Operator4 rho = [] {
    const Spinor2 up = (Spinor2() << 1, 0).finished();
    const Spinor2 dn = (Spinor2() << 0, 1).finished();
    const Eigen::Vector4cd psi =
        (tensor_ket(up, dn) - tensor_ket(dn, up)) / std::sqrt(2.0);
    const Operator4 outer = psi * psi.adjoint();

    Operator4 algebraic = identity4();
    algebraic -= tensor(pauli_x(), pauli_x());
    algebraic -= tensor(pauli_y(), pauli_y());
    algebraic -= tensor(pauli_z(), pauli_z());
    algebraic *= 0.25;

    if (frobenius_distance(outer, algebraic) > kTol) {
      throw std::logic_error("rho_epr: outer-product and Pauli-algebra "
                             "constructions disagree");
    }
    require_density_operator(outer);
    return outer;
  }();
  return PairState{PairKind::Entangled, rho, std::nullopt, StateNorm::Unit};
}

Operator2 reduced(const Direction& axis, int branch, Side spin,
                  StateNorm norm) {
  if (branch != 1 && branch != -1) {
    throw std::invalid_argument("reduced: branch must be +1 or -1");
  }
  (void)spin;  // bookkeeping only; the matrix depends on axis and branch
  Operator2 r = 0.25 * (identity2() + double(branch) * pauli_dot(axis));
  if (norm == StateNorm::Unit) r *= 2.0;
  return r;
}

PairState rho_disentangled(const Direction& axis, StateNorm norm) {
  const Operator2 plus1 = reduced(axis, +1, Side::One);
  const Operator2 minus1 = reduced(axis, -1, Side::One);
  const Operator2 plus2 = reduced(axis, +1, Side::Two);
  const Operator2 minus2 = reduced(axis, -1, Side::Two);

  Operator4 rho = 0.5 * (tensor(plus1, minus2) + tensor(minus1, plus2));
  if (norm == StateNorm::Unit) {
    rho *= 8.0;
    require_density_operator(rho);
  } else {
    require_density_operator(rho, 1.0 / 8.0);
  }
  return PairState{PairKind::DisentangledFixedAxis, rho, axis, norm};
}

PhotonPairState make_photon_state(const Eigen::Vector4cd& amps) {
  if (std::abs(amps.norm() - 1.0) > kTol) {
    throw std::invalid_argument("PhotonPairState: amplitudes are not unit norm");
  }
  return PhotonPairState{amps};
}

PhotonPairState photon_phi_plus() {
  const double r = 1.0 / std::sqrt(2.0);
  return make_photon_state((Eigen::Vector4cd() << r, 0, 0, r).finished());
}

PhotonPairState photon_phi_minus() {
  const double r = 1.0 / std::sqrt(2.0);
  return make_photon_state((Eigen::Vector4cd() << r, 0, 0, -r).finished());
}

PhotonPairState photon_singlet() {
  const double r = 1.0 / std::sqrt(2.0);
  return make_photon_state((Eigen::Vector4cd() << 0, r, -r, 0).finished());
}

PhotonPairState parity_invert(const PhotonPairState& s) {
  Eigen::Vector4cd out;
  out << s.amps(3), s.amps(2), s.amps(1), s.amps(0);
  return PhotonPairState{out};
}

}  // namespace eprsim
