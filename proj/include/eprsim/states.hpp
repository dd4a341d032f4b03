#pragma once

// Constructors for every state the simulator uses: directional kets, the
// two-spin singlet, conditional reduced operators, the fixed-axis
// disentangled mixture, and photon pair states with parity operations.

#include <optional>

#include "eprsim/qlinalg.hpp"

namespace eprsim {

// Two normalizations coexist deliberately. `Paper` keeps the reduced
// operators at trace 1/2 (so the mixture below has trace 1/8) and makes the
// prefactor ladder 1/4, 1/8, 1/16, 1/32 visible end to end; `Unit` rescales
// to trace 1. Silent rescaling is forbidden: every value is tagged.
enum class StateNorm { Paper, Unit };

enum class PairKind { Entangled, DisentangledFixedAxis };

/// A two-spin state: the entangled singlet density operator, or the
/// disentangled mixture tagged with its quantization axis.
struct PairState {
  PairKind kind;
  Operator4 rho;
  std::optional<Direction> axis;  // present iff DisentangledFixedAxis
  StateNorm norm;
};

/// Spin-up ket along axis: the +1 eigenvector of pauli_dot(axis),
///   ( cos(t/2), sin(t/2) e^{+i p} )  with (t, p) the axis polar angles.
Spinor2 ket_plus(const Direction& axis);

/// Spin-down ket along axis: the -1 eigenvector,
///   ( -sin(t/2) e^{-i p}, cos(t/2) ).
Spinor2 ket_minus(const Direction& axis);

/// The singlet density operator. Built two ways -- as the outer product of
/// (|+->-|-+>)/sqrt(2) and term-by-term as (1/4)(I.I - sigma1.sigma2) --
/// and the two constructions are checked against each other at kTol.
/// Pure (rank 1), unit trace, identical for every quantization axis.
PairState rho_epr();

/// Single-spin operator carried away by one member of a split pair that was
/// conditioned on its partner's branch: (1/4)(I + branch * sigma.axis), the
/// unnormalized conditional reduction of the singlet (trace 1/2 under
/// StateNorm::Paper, rescaled to trace 1 under StateNorm::Unit).
/// `spin` records which side of the pair this operator describes; the sign
/// convention is branch = +1 for the "plus" member, so spin 1 of a (+)
/// branch and spin 2 of a (-) branch carry the same matrix.
Operator2 reduced(const Direction& axis, int branch, Side spin,
                  StateNorm norm = StateNorm::Paper);

/// The disentangled pair state for one quantization axis: the equal mixture
/// of (+,-) and (-,+) reduced-operator products. Raw trace is 1/8 under
/// StateNorm::Paper (each factor has trace 1/2); StateNorm::Unit rescales
/// to a proper density operator of purity 1/2.
PairState rho_disentangled(const Direction& axis,
                           StateNorm norm = StateNorm::Paper);

/// A photon pair state over the helicity product basis, amplitude order
/// {R1R2, R1L2, L1R2, L1L2}; unit norm.
struct PhotonPairState {
  Eigen::Vector4cd amps;
};

PhotonPairState make_photon_state(const Eigen::Vector4cd& amps);

/// (|R1R2> + |L1L2>)/sqrt(2) -- parity eigenstate with eigenvalue +1.
PhotonPairState photon_phi_plus();
/// (|R1R2> - |L1L2>)/sqrt(2) -- parity eigenstate with eigenvalue -1.
PhotonPairState photon_phi_minus();
/// (|R1L2> - |L1R2>)/sqrt(2).
PhotonPairState photon_singlet();

/// Inversion through the source: swaps R and L on both photons at once.
/// An involution; maps R1R2 <-> L1L2 and R1L2 <-> L1R2.
PhotonPairState parity_invert(const PhotonPairState& s);

}  // namespace eprsim
