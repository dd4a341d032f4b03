#pragma once

// Seeded Monte Carlo event generation for both models, axis samplers,
// empirical estimators, and pair-shuffling controls.
//
// RNG identity: SplitMix64 (Steele/Lea/Flood; golden-gamma increment with
// the Stafford mix13 finalizer). Every pair gets one independent substream
// per role, keyed by chained finalizer mixing of (seed, pair_id, role), so
// each event is a pure function of (config, pair_id) and generation order
// never matters. The net-harness detectors reuse the same derivation, which
// makes a distributed run bit-identical to the in-process run.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "eprsim/correlations.hpp"

namespace eprsim {

/// SplitMix64 stream over a 64-bit state.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() { return double(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Independent randomness lanes inside one pair.
enum class Role : std::uint64_t {
  Axis = 1,
  Branch = 2,
  OutcomeA = 3,
  OutcomeB = 4,
  Thinning = 5,
  Shuffle = 6,
};

/// Substream for (seed, pair_id, role); the sole source of randomness for
/// that lane of that pair.
SplitMix64 substream(std::uint64_t seed, std::uint64_t pair_id, Role role);

enum class SamplerKind { Isotropic, PlanarXY, Fixed };

/// Hidden-axis sampler: uniform on the sphere, uniform on the x-y circle,
/// or a fixed direction.
struct AxisSampler {
  SamplerKind kind = SamplerKind::Isotropic;
  std::optional<Direction> fixed;  // required iff kind == Fixed

  static AxisSampler isotropic() { return {SamplerKind::Isotropic, {}}; }
  static AxisSampler planar_xy() { return {SamplerKind::PlanarXY, {}}; }
  static AxisSampler fixed_axis(const Direction& d) {
    return {SamplerKind::Fixed, d};
  }

  Direction sample(SplitMix64& rng) const;
};

enum class Model { Entangled, Disentangled };

struct RunConfig {
  std::uint64_t n_pairs = 0;
  std::uint64_t seed = 0;
  Model model = Model::Entangled;
  AxisSampler sampler = AxisSampler::isotropic();
  MeasurementSetting settings;
  // When set, each pair survives with probability 1/4 (the raw disentangled
  // table total), emulating the raw normalization as physical event loss.
  bool thinning = false;

  void validate() const;  // throws std::invalid_argument listing each fault
};

/// One simulated pair. axis/branch are the hidden source variables; the
/// entangled model has none (axis empty, branch 0) because its joint
/// outcome draw is not mediated by any per-pair axis.
struct PairEvent {
  std::uint64_t pair_id = 0;
  std::optional<Direction> axis;
  int branch = 0;  // +1/-1, or 0 when no hidden branch exists
  Direction setting_a{0, 0, 1};
  Direction setting_b{0, 0, 1};
  int outcome_a = 0;  // +1 or -1
  int outcome_b = 0;
};

/// Generates the event for one pair id. Disentangled draws: axis from the
/// sampler, branch +-1 with equal odds, then outcome_a from only
/// (axis, branch, setting_a) and outcome_b from only (axis, branch,
/// setting_b) -- the locality contract; the two draws share nothing beyond
/// what the source fixed. Entangled draws the joint outcome pair from the
/// four probabilities 1/4 (1 -+ cos theta_ab).
PairEvent generate_event(const RunConfig& config, std::uint64_t pair_id);

/// All events of a run, in pair-id order. Honors thinning (dropped pairs
/// simply do not appear).
std::vector<PairEvent> generate_events(const RunConfig& config);

/// Mean with standard error (sample std / sqrt(n)).
struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t n = 0;
};

/// Streaming mean/variance accumulator (Welford), with the exact-mean
/// pairwise merge so partial estimates can be combined in any order.
class RunningStats {
 public:
  void add(double x);
  void merge(const RunningStats& other);
  std::uint64_t count() const { return n_; }
  double mean() const { return mean_; }
  /// Unbiased sample variance; requires n >= 2.
  double variance() const;
  Estimate estimate() const;

 private:
  std::uint64_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

/// Correlation of a run without materializing events.
Estimate simulate_correlation(const RunConfig& config);

/// Mean of outcome_a * outcome_b. Throws std::invalid_argument on fewer
/// than 2 events.
Estimate estimate_correlation(std::span<const PairEvent> events);

/// Detaches partners: permutes the outcome_b column across pair ids
/// (Fisher-Yates on the rng), leaving everything else in place. The
/// shuffled stream models accidental pairings and must decorrelate.
std::vector<PairEvent> shuffle_pairs(std::vector<PairEvent> events,
                                     SplitMix64& rng);

/// Counts of (++, +-, -+, --) outcome pairs.
std::array<std::uint64_t, 4> coincidence_counts(
    std::span<const PairEvent> events);

/// Empirical coincidence frequencies (PerPairs normalization).
CoincidenceTable empirical_table(std::span<const PairEvent> events);

}  // namespace eprsim
