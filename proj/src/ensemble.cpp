#include "eprsim/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace eprsim {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

SplitMix64 substream(std::uint64_t seed, std::uint64_t pair_id, Role role) {
  std::uint64_t h = mix64(seed + 0x9e3779b97f4a7c15ULL);
  h = mix64(h ^ (pair_id + 0x9e3779b97f4a7c15ULL));
  h = mix64(h ^ static_cast<std::uint64_t>(role));
  return SplitMix64(h);
}

Direction AxisSampler::sample(SplitMix64& rng) const {
  switch (kind) {
    case SamplerKind::Isotropic: {
      const double z = 2.0 * rng.next_double() - 1.0;
      const double phi = 2.0 * std::numbers::pi * rng.next_double();
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      return Direction(r * std::cos(phi), r * std::sin(phi), z);
    }
    case SamplerKind::PlanarXY: {
      const double phi = 2.0 * std::numbers::pi * rng.next_double();
      return Direction(std::cos(phi), std::sin(phi), 0.0);
    }
    case SamplerKind::Fixed:
      if (!fixed) {
        throw std::invalid_argument("AxisSampler: Fixed sampler has no axis");
      }
      return *fixed;
  }
  throw std::logic_error("AxisSampler: unknown kind");
}

void RunConfig::validate() const {
  std::string faults;
  if (n_pairs < 1) faults += " n_pairs must be >= 1;";
  if (sampler.kind == SamplerKind::Fixed && !sampler.fixed) {
    faults += " fixed sampler needs an axis;";
  }
  if (thinning && model != Model::Disentangled) {
    faults += " thinning applies to the disentangled model only;";
  }
  if (!faults.empty()) {
    throw std::invalid_argument("RunConfig:" + faults);
  }
}

namespace {

int draw_sign(SplitMix64& rng, double p_plus) {
  return rng.next_double() < p_plus ? +1 : -1;
}

}  // namespace

PairEvent generate_event(const RunConfig& config, std::uint64_t pair_id) {
  PairEvent ev;
  ev.pair_id = pair_id;
  ev.setting_a = config.settings.a;
  ev.setting_b = config.settings.b;

  if (config.model == Model::Entangled) {
    // Joint draw from the four coincidence probabilities. Needs both
    // settings at one point -- this is what the distributed harness can
    // never do, and why it only runs the disentangled model.
    const double c = std::cos(config.settings.theta_ab());
    const double equal = 0.25 * (1.0 - c);
    const double opposite = 0.25 * (1.0 + c);
    SplitMix64 rng = substream(config.seed, pair_id, Role::OutcomeA);
    const double u = rng.next_double();
    if (u < equal) {
      ev.outcome_a = +1, ev.outcome_b = +1;
    } else if (u < equal + opposite) {
      ev.outcome_a = +1, ev.outcome_b = -1;
    } else if (u < equal + 2 * opposite) {
      ev.outcome_a = -1, ev.outcome_b = +1;
    } else {
      ev.outcome_a = -1, ev.outcome_b = -1;
    }
    return ev;
  }

  SplitMix64 axis_rng = substream(config.seed, pair_id, Role::Axis);
  const Direction axis = config.sampler.sample(axis_rng);
  SplitMix64 branch_rng = substream(config.seed, pair_id, Role::Branch);
  const int branch = draw_sign(branch_rng, 0.5);

  // Locality contract: each outcome draw consumes only (axis, branch, own
  // setting) plus its own substream.
  SplitMix64 a_rng = substream(config.seed, pair_id, Role::OutcomeA);
  const double p_a = 0.5 * (1.0 + branch * config.settings.a.dot(axis));
  const int outcome_a = draw_sign(a_rng, p_a);

  SplitMix64 b_rng = substream(config.seed, pair_id, Role::OutcomeB);
  const double p_b = 0.5 * (1.0 - branch * config.settings.b.dot(axis));
  const int outcome_b = draw_sign(b_rng, p_b);

  ev.axis = axis;
  ev.branch = branch;
  ev.outcome_a = outcome_a;
  ev.outcome_b = outcome_b;
  return ev;
}

namespace {

bool keep_after_thinning(const RunConfig& config, std::uint64_t pair_id) {
  if (!config.thinning) return true;
  SplitMix64 rng = substream(config.seed, pair_id, Role::Thinning);
  return rng.next_double() < 0.25;  // raw table total
}

}  // namespace

std::vector<PairEvent> generate_events(const RunConfig& config) {
  config.validate();
  std::vector<PairEvent> events;
  events.reserve(config.n_pairs);
  for (std::uint64_t id = 0; id < config.n_pairs; ++id) {
    if (!keep_after_thinning(config, id)) continue;
    events.push_back(generate_event(config, id));
  }
  return events;
}

void RunningStats::add(double x) {
  ++n_;
  const double delta = x - mean_;
  mean_ += delta / double(n_);
  m2_ += delta * (x - mean_);
}

void RunningStats::merge(const RunningStats& other) {
  if (other.n_ == 0) return;
  if (n_ == 0) {
    *this = other;
    return;
  }
  const double na = double(n_), nb = double(other.n_);
  const double delta = other.mean_ - mean_;
  const double n = na + nb;
  // Exact weighted mean; Chan et al. update for the second moment.
  mean_ = (na * mean_ + nb * other.mean_) / n;
  m2_ += other.m2_ + delta * delta * na * nb / n;
  n_ += other.n_;
}

double RunningStats::variance() const {
  if (n_ < 2) {
    throw std::invalid_argument("RunningStats: variance needs n >= 2");
  }
  return m2_ / double(n_ - 1);
}

Estimate RunningStats::estimate() const {
  return Estimate{mean_, std::sqrt(variance() / double(n_)), n_};
}

Estimate simulate_correlation(const RunConfig& config) {
  config.validate();
  RunningStats stats;
  for (std::uint64_t id = 0; id < config.n_pairs; ++id) {
    if (!keep_after_thinning(config, id)) continue;
    const PairEvent ev = generate_event(config, id);
    stats.add(double(ev.outcome_a * ev.outcome_b));
  }
  if (stats.count() < 2) {
    throw std::invalid_argument("simulate_correlation: fewer than 2 events");
  }
  return stats.estimate();
}

Estimate estimate_correlation(std::span<const PairEvent> events) {
  if (events.size() < 2) {
    throw std::invalid_argument("estimate_correlation: needs >= 2 events");
  }
  RunningStats stats;
  for (const PairEvent& ev : events) {
    stats.add(double(ev.outcome_a * ev.outcome_b));
  }
  return stats.estimate();
}

std::vector<PairEvent> shuffle_pairs(std::vector<PairEvent> events,
                                     SplitMix64& rng) {
  if (events.size() < 2) {
    throw std::invalid_argument("shuffle_pairs: needs >= 2 events");
  }
  // Fisher-Yates over the outcome_b column only.
  for (std::size_t i = events.size() - 1; i > 0; --i) {
    const std::size_t j =
        std::size_t(rng.next_double() * double(i + 1));  // j in [0, i]
    std::swap(events[i].outcome_b, events[j].outcome_b);
  }
  return events;
}

std::array<std::uint64_t, 4> coincidence_counts(
    std::span<const PairEvent> events) {
  std::array<std::uint64_t, 4> counts{0, 0, 0, 0};
  for (const PairEvent& ev : events) {
    const int idx = (ev.outcome_a > 0 ? 0 : 2) + (ev.outcome_b > 0 ? 0 : 1);
    ++counts[std::size_t(idx)];
  }
  return counts;
}

CoincidenceTable empirical_table(std::span<const PairEvent> events) {
  if (events.empty()) {
    throw std::invalid_argument("empirical_table: no events");
  }
  const auto counts = coincidence_counts(events);
  const double n = double(events.size());
  return CoincidenceTable{double(counts[0]) / n, double(counts[1]) / n,
                          double(counts[2]) / n, double(counts[3]) / n,
                          Normalization::PerPairs};
}

}  // namespace eprsim
