#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "qvote/histogram.hpp"
#include "qvote/random.hpp"

namespace qvote {

// Simulation of s-bit phase estimation applied to counting: a count c out of
// 2^t items maps to the phase phi = arcsin(sqrt(c / 2^t)) / pi in [0, 1/2];
// the estimator measures an s-bit outcome b whose law is the Fejer kernel
// centered at phi, and b maps back to the count estimate 2^t sin^2(pi b/2^s).
//
// Only the +phi eigenphase is simulated. The physical measurement is an even
// mixture over eigenphases phi and 1-phi, but the outcome laws mirror each
// other (b <-> 2^s - b) and the count estimate is invariant under that mirror,
// so the estimate distribution is identical.

inline constexpr int kMinOutcomeBits = 2;
// Guards the 2^s-entry tables; 2^26 doubles is a 512 MiB distribution.
inline constexpr int kMaxOutcomeBits = 26;

struct PhaseValue {
  double value = 0.0;  // in [0, 1/2]

  explicit PhaseValue(double v) : value(v) {
    if (!(v >= 0.0 && v <= 0.5)) throw std::domain_error("PhaseValue: phase must lie in [0, 1/2]");
  }
};

struct CountingParams {
  int t = 0;  // count register: counts live in [0, 2^t]
  int s = 0;  // outcome register: 2^s grid points

  CountingParams(int t_, int s_) : t(t_), s(s_) {
    if (t < 0 || t > 52) throw std::invalid_argument("CountingParams: t must be in [0, 52]");
    if (s < kMinOutcomeBits || s > kMaxOutcomeBits)
      throw std::invalid_argument("CountingParams: s must be in [2, 26]");
  }
};

struct CountingDistribution {
  int s = 0;
  std::vector<double> probs;  // 2^s entries, sums to 1
};

inline PhaseValue phase_of(double count, int t) {
  if (t < 0 || t > 52) throw std::invalid_argument("phase_of: t must be in [0, 52]");
  const double scaled = count * std::ldexp(1.0, -t);
  if (!(scaled >= 0.0 && scaled <= 1.0))
    throw std::domain_error("phase_of: count must lie in [0, 2^t]");
  return PhaseValue(std::asin(std::sqrt(scaled)) / std::numbers::pi);
}

// Exact outcome law of s-bit phase estimation at phase phi:
//   P(b) = sin^2(2^s pi d_b) / (2^2s sin^2(pi d_b)),  d_b = wrap(phi - b/2^s)
// with d_b wrapped to [-1/2, 1/2]. A phase on the grid (d_b = 0) puts all
// mass on that outcome.
inline CountingDistribution pe_distribution(PhaseValue phi, int s) {
  if (s < kMinOutcomeBits || s > kMaxOutcomeBits)
    throw std::invalid_argument("pe_distribution: s must be in [2, 26]");
  const std::size_t n = std::size_t{1} << s;
  const double inv_n = std::ldexp(1.0, -s);
  const double nn = std::ldexp(1.0, 2 * s);
  CountingDistribution dist{s, std::vector<double>(n)};
  for (std::size_t b = 0; b < n; ++b) {
    double d = phi.value - static_cast<double>(b) * inv_n;
    d -= std::round(d);
    if (std::fabs(d) < 1e-12) {
      // Analytic limit: the exact grid point absorbs all probability.
      std::fill(dist.probs.begin(), dist.probs.end(), 0.0);
      dist.probs[b] = 1.0;
      return dist;
    }
    const double num = std::sin(static_cast<double>(n) * std::numbers::pi * d);
    const double den = std::sin(std::numbers::pi * d);
    dist.probs[b] = (num * num) / (nn * den * den);
  }
  return dist;
}

inline double estimate_count(std::uint64_t b, int s, int t) {
  if (s < 1 || s > kMaxOutcomeBits) throw std::invalid_argument("estimate_count: bad s");
  if (b >= (std::uint64_t{1} << s)) throw std::invalid_argument("estimate_count: outcome out of range");
  const double x = std::sin(std::numbers::pi * static_cast<double>(b) * std::ldexp(1.0, -s));
  return std::ldexp(x * x, t);
}

// Inverse-CDF draw by linear scan; fine for one-off use. Hot paths should
// sample through CountingModel, which keeps cumulative tables.
inline std::uint64_t sample_outcome(const CountingDistribution& dist, RandomStream& rng) {
  const double u = rng.uniform();
  double acc = 0.0;
  std::uint64_t last_positive = 0;
  for (std::uint64_t b = 0; b < dist.probs.size(); ++b) {
    const double p = dist.probs[static_cast<std::size_t>(b)];
    if (p > 0.0) last_positive = b;
    acc += p;
    if (u < acc) return b;
  }
  return last_positive;  // u fell into the rounding residue of the total
}

// Precomputed sampler for one histogram: a cumulative outcome table per
// distinct phase (entries with equal weight share one table) and the shared
// outcome -> count-estimate map. Immutable after construction; safe to share
// across threads, each with its own RandomStream.
class CountingModel {
 public:
  CountingModel(const Histogram& hist, CountingParams params)
      : hist_(hist), params_(params) {
    // Relative slack: profile constructions divide n across bins, and the
    // re-accumulated total can overshoot an exact power of two by a few ulps.
    const double total = hist.total();
    if (total > std::ldexp(1.0, params.t) * (1.0 + 1e-9))
      throw std::invalid_argument("CountingModel: histogram total exceeds 2^t");
    const std::size_t n = std::size_t{1} << params.s;
    estimate_.resize(n);
    for (std::size_t b = 0; b < n; ++b)
      estimate_[b] = estimate_count(b, params.s, params.t);

    std::unordered_map<std::uint64_t, int> phase_slot;
    phase_index_.reserve(hist.weight.size());
    for (double w : hist.weight) {
      const std::uint64_t key = std::bit_cast<std::uint64_t>(w);
      auto [it, inserted] = phase_slot.try_emplace(key, static_cast<int>(cdf_.size()));
      if (inserted) {
        CountingDistribution d = pe_distribution(phase_of(w, params.t), params.s);
        double acc = 0.0;
        for (double& p : d.probs) {
          acc += p;
          p = acc;  // turn the pmf into its running sum in place
        }
        cdf_.push_back(std::move(d.probs));
      }
      phase_index_.push_back(it->second);
    }
  }

  const Histogram& profile() const { return hist_; }
  CountingParams params() const { return params_; }
  int distinct_phases() const { return static_cast<int>(cdf_.size()); }

  // One counting round: an independent s-bit measurement per histogram entry,
  // mapped to count estimates.
  Histogram sample_round(RandomStream& rng) const {
    std::vector<double> est(phase_index_.size());
    for (std::size_t j = 0; j < phase_index_.size(); ++j) {
      const std::vector<double>& cdf = cdf_[static_cast<std::size_t>(phase_index_[j])];
      const double u = rng.uniform();
      std::size_t b = static_cast<std::size_t>(
          std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
      if (b >= cdf.size()) b = cdf.size() - 1;
      est[j] = estimate_[b];
    }
    return Histogram(hist_.m, std::move(est));
  }

 private:
  Histogram hist_;
  CountingParams params_;
  std::vector<int> phase_index_;
  std::vector<std::vector<double>> cdf_;
  std::vector<double> estimate_;
};

// Convenience single round. Repeated use should construct a CountingModel
// once and sample from it.
inline Histogram counting_round(const Histogram& hist, CountingParams params, RandomStream& rng) {
  return CountingModel(hist, params).sample_round(rng);
}

}  // namespace qvote
