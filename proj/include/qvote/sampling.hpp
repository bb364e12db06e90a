#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "qvote/random.hpp"

namespace qvote {

// One-shot draws from the closed-form sampling laws. A sampled electorate is
// drawn per histogram bin in a single pass (conditional binomial chain for
// with-replacement, conditional hypergeometric chain for without), which is
// distribution-identical to drawing ballots one at a time and far cheaper.
// Variates are generated by an inverse-CDF walk outward from the mode, so a
// draw costs O(standard deviation) ratio multiplications and every draw is a
// pure function of the RandomStream.

inline double log_choose(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(k) + 1) -
         std::lgamma(static_cast<double>(n - k) + 1);
}

inline double binomial_log_pmf(std::int64_t trials, double p, std::int64_t x) {
  if (x < 0 || x > trials) return -std::numeric_limits<double>::infinity();
  if (p <= 0.0) return x == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  if (p >= 1.0) return x == trials ? 0.0 : -std::numeric_limits<double>::infinity();
  return log_choose(trials, x) + static_cast<double>(x) * std::log(p) +
         static_cast<double>(trials - x) * std::log1p(-p);
}

inline double hypergeometric_log_pmf(std::int64_t population, std::int64_t successes,
                                     std::int64_t draws, std::int64_t x) {
  return log_choose(successes, x) + log_choose(population - successes, draws - x) -
         log_choose(population, draws);
}

namespace detail {

// Inverse-CDF draw from a unimodal integer law on [lo, hi]: spend u starting
// at the mode and expand outward, tracking pmf values by ratio updates.
// RatioUp(x) = f(x+1)/f(x); RatioDown(x) = f(x-1)/f(x).
template <class RatioUp, class RatioDown>
std::int64_t mode_walk(std::int64_t lo, std::int64_t hi, std::int64_t mode, double f_mode,
                       double u, RatioUp&& up, RatioDown&& down) {
  double acc = f_mode;
  if (u <= acc) return mode;
  std::int64_t a = mode, b = mode;
  double fa = f_mode, fb = f_mode;
  while (a < hi || b > lo) {
    if (a < hi) {
      fa *= up(a);
      ++a;
      acc += fa;
      if (u <= acc) return a;
    }
    if (b > lo) {
      fb *= down(b);
      --b;
      acc += fb;
      if (u <= acc) return b;
    }
  }
  return mode;  // u landed in the total's rounding residue
}

}  // namespace detail

inline std::int64_t sample_binomial(std::int64_t trials, double p, RandomStream& rng) {
  if (trials < 0) throw std::invalid_argument("sample_binomial: negative trial count");
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("sample_binomial: p must be in [0, 1]");
  if (trials == 0 || p <= 0.0) return 0;
  if (p >= 1.0) return trials;
  std::int64_t mode = static_cast<std::int64_t>(std::floor((static_cast<double>(trials) + 1) * p));
  mode = std::clamp<std::int64_t>(mode, 0, trials);
  const double f_mode = std::exp(binomial_log_pmf(trials, p, mode));
  const double odds = p / (1.0 - p);
  return detail::mode_walk(
      0, trials, mode, f_mode, rng.uniform(),
      [&](std::int64_t x) {
        return odds * static_cast<double>(trials - x) / static_cast<double>(x + 1);
      },
      [&](std::int64_t x) {
        return static_cast<double>(x) / (odds * static_cast<double>(trials - x + 1));
      });
}

// Count of marked items in `draws` draws without replacement from a
// population with `successes` marked items.
inline std::int64_t sample_hypergeometric(std::int64_t population, std::int64_t successes,
                                          std::int64_t draws, RandomStream& rng) {
  if (population < 0 || successes < 0 || successes > population || draws < 0 || draws > population)
    throw std::invalid_argument("sample_hypergeometric: inconsistent parameters");
  const std::int64_t lo = std::max<std::int64_t>(0, draws - (population - successes));
  const std::int64_t hi = std::min(draws, successes);
  if (lo == hi) return lo;
  std::int64_t mode = static_cast<std::int64_t>(
      std::floor(static_cast<double>(draws + 1) * static_cast<double>(successes + 1) /
                 static_cast<double>(population + 2)));
  mode = std::clamp(mode, lo, hi);
  const double f_mode = std::exp(hypergeometric_log_pmf(population, successes, draws, mode));
  return detail::mode_walk(
      lo, hi, mode, f_mode, rng.uniform(),
      [&](std::int64_t x) {
        return static_cast<double>(successes - x) * static_cast<double>(draws - x) /
               (static_cast<double>(x + 1) *
                static_cast<double>(population - successes - draws + x + 1));
      },
      [&](std::int64_t x) {
        return static_cast<double>(x) *
               static_cast<double>(population - successes - draws + x) /
               (static_cast<double>(successes - x + 1) * static_cast<double>(draws - x + 1));
      });
}

// Multinomial(draws; weight/sum(weight)) via the conditional binomial chain.
inline std::vector<std::int64_t> sample_multinomial(std::int64_t draws,
                                                    const std::vector<double>& weight,
                                                    RandomStream& rng) {
  if (draws < 0) throw std::invalid_argument("sample_multinomial: negative draw count");
  double remaining_weight = 0.0;
  for (double w : weight) {
    if (!(w >= 0.0)) throw std::domain_error("sample_multinomial: weights must be nonnegative");
    remaining_weight += w;
  }
  if (!(remaining_weight > 0.0)) throw std::domain_error("sample_multinomial: zero total weight");
  std::vector<std::int64_t> out(weight.size(), 0);
  std::int64_t left = draws;
  for (std::size_t j = 0; j + 1 < weight.size() && left > 0; ++j) {
    const double p = std::clamp(weight[j] / remaining_weight, 0.0, 1.0);
    const std::int64_t x = sample_binomial(left, p, rng);
    out[j] = x;
    left -= x;
    remaining_weight -= weight[j];
    if (remaining_weight <= 0.0) break;
  }
  if (!out.empty()) out.back() += left;
  return out;
}

// Multivariate hypergeometric via the conditional hypergeometric chain:
// exact law of drawing `draws` ballots without replacement from an integer
// histogram.
inline std::vector<std::int64_t> sample_multivariate_hypergeometric(
    const std::vector<std::int64_t>& counts, std::int64_t draws, RandomStream& rng) {
  std::int64_t population = 0;
  for (std::int64_t c : counts) {
    if (c < 0) throw std::invalid_argument("sample_multivariate_hypergeometric: negative count");
    population += c;
  }
  if (draws < 0 || draws > population)
    throw std::invalid_argument("sample_multivariate_hypergeometric: draws must be in [0, population]");
  std::vector<std::int64_t> out(counts.size(), 0);
  std::int64_t left = draws;
  std::int64_t tail = population;  // items in bins j..end
  for (std::size_t j = 0; j + 1 < counts.size() && left > 0; ++j) {
    const std::int64_t x = sample_hypergeometric(tail, counts[j], left, rng);
    out[j] = x;
    left -= x;
    tail -= counts[j];
  }
  if (!out.empty()) out.back() += left;
  return out;
}

}  // namespace qvote
