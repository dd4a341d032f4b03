#pragma once

// Closed-form correlations and coincidence probabilities for both pair
// models. Each function evaluates its closed form AND the corresponding
// density-operator trace and cross-checks the two at kTol before returning;
// a mismatch throws std::logic_error (it would mean a bug, not bad input).

#include <array>
#include <string>

#include "eprsim/states.hpp"

namespace eprsim {

/// A pair of Stern-Gerlach filter orientations.
struct MeasurementSetting {
  Direction a;
  Direction b;
  /// Angle between the two filters, in [0, pi].
  double theta_ab() const { return angle_between(a, b); }
};

// Normalization tag for coincidence tables.
//   PerSpins:  single-side probabilities, Tr against trace-1/2 operators;
//              one table row per spin, the four entries sum to 1.
//   PerPairs:  joint probabilities conditioned on a detected pair; sums to 1.
//   Raw:       joint probabilities with the trace-1/8 mixture left as is;
//              the four entries sum to 1/4.
enum class Normalization { PerSpins, PerPairs, Raw };

/// Four coincidence probabilities P(++), P(+-), P(-+), P(--) plus the
/// normalization they are expressed in.
struct CoincidenceTable {
  double pp, pm, mp, mm;
  Normalization norm;

  double sum() const { return pp + pm + mp + mm; }
  /// P(++) - P(+-) - P(-+) + P(--): the correlation the table encodes,
  /// in the table's own normalization.
  double correlation() const { return pp - pm - mp + mm; }
};

/// Entangled-pair correlation <a.sigma1 sigma2.b> = -cos(theta_ab).
double corr_entangled(const MeasurementSetting& s);

/// Per-spin expectations along the filters for a split pair carrying `axis`
/// with spin 1 in the + branch: (+1/2 a.axis, -1/2 b.axis).
std::array<double, 2> single_expectations(const MeasurementSetting& s,
                                          const Direction& axis);

/// Product of the two single expectations: -1/4 (a.axis)(b.axis). The
/// correlation one fixed-axis sub-ensemble contributes.
double pair_product_fixed_axis(const MeasurementSetting& s,
                               const Direction& axis);

/// cos(theta_ab) split in the frame whose polar axis is `axis`:
///   classical     = cos(theta_a) cos(theta_b)
///   interference  = sin(theta_a) sin(theta_b) cos(phi_a - phi_b)
/// The parts sum to cos(theta_ab). When a or b is (anti)parallel to the
/// axis the azimuth is undefined but the interference part is zero anyway.
struct AngleDecomposition {
  double classical;
  double interference;
};
AngleDecomposition angle_decomposition(const MeasurementSetting& s,
                                       const Direction& axis);

/// Isotropic ensemble average of the fixed-axis pair product:
/// -(1/12) cos(theta_ab). The 1/3 is the sphere average of
/// (a.P)(P.b) -> (1/3) a.b; the 1/4 comes from the reduced operators.
double ensemble_corr_isotropic(const MeasurementSetting& s);

/// Correlation between spins from different pairs (independent axes): 0.
double nonpair_corr();

/// Single-side detection probabilities for a (+,-) branch pair carrying
/// `axis`, in order {spin1 +a, spin1 -a, spin2 +b, spin2 -b}:
///   ( 1/2 cos^2(ta/2), 1/2 sin^2(ta/2), 1/2 sin^2(tb/2), 1/2 cos^2(tb/2) )
/// with ta, tb the filter angles from the axis. Sums to 1.
std::array<double, 4> single_side_probs(const MeasurementSetting& s,
                                        const Direction& axis);

/// Entangled coincidence table: equal-sign entries 1/4 (1 - cos theta_ab),
/// opposite-sign entries 1/4 (1 + cos theta_ab). PerPairs normalization.
CoincidenceTable coincidence_entangled(const MeasurementSetting& s);

/// Fixed-axis disentangled coincidence table (Raw normalization):
/// equal-sign 1/16 (1 - cos ta cos tb), opposite-sign 1/16 (1 + cos ta cos tb).
/// Applying the table correlation reproduces pair_product_fixed_axis.
CoincidenceTable coincidence_disentangled_fixed(const MeasurementSetting& s,
                                                const Direction& axis);

/// Disentangled table averaged over axes in the x-y plane. Requires the
/// out-of-plane term a_z * b_z to vanish (checked at kTol, rejected loudly
/// otherwise). Raw: equal-sign 1/16 (1 - 1/2 cos theta_ab), opposite-sign
/// 1/16 (1 + 1/2 cos theta_ab), summing to 1/4; PerPairs rescales by 4 to
/// equal-sign 1/8 + 1/8 (1 - cos theta_ab), opposite 1/8 + 1/8 (1 + cos
/// theta_ab), summing to 1.
CoincidenceTable coincidence_disentangled_planar(const MeasurementSetting& s,
                                                 Normalization norm);

/// Detection-rate bookkeeping for planar settings. raw_sum is the raw
/// disentangled table total (1/4); per_channel_max is the 1/16 = 6.25%
/// per-channel probability scale of that table; entangled_sum is the
/// entangled table total (1) for contrast. notes flags a documented
/// inconsistency (see below).
struct DetectionReport {
  double raw_sum;
  double per_channel_max;
  double entangled_sum;
  std::string notes;
};
DetectionReport detection_report(const MeasurementSetting& s);

}  // namespace eprsim
