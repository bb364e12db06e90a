#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace qvote {

inline constexpr double kZ95 = 1.959963984540054;
inline constexpr double kZ99OneSided = 2.3263478740408408;

// Half-width of the Wilson score interval for a binomial proportion.
inline double wilson_half_width(std::int64_t successes, std::int64_t trials, double z = kZ95) {
  if (trials <= 0 || successes < 0 || successes > trials)
    throw std::invalid_argument("wilson_half_width: need 0 <= successes <= trials, trials > 0");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  return (z / (1.0 + z2 / n)) * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
}

// z statistic for the one-sided difference between two proportions.
inline double two_proportion_z(std::int64_t succ_a, std::int64_t n_a, std::int64_t succ_b,
                               std::int64_t n_b) {
  const double pa = static_cast<double>(succ_a) / static_cast<double>(n_a);
  const double pb = static_cast<double>(succ_b) / static_cast<double>(n_b);
  const double pooled = static_cast<double>(succ_a + succ_b) / static_cast<double>(n_a + n_b);
  const double se = std::sqrt(pooled * (1.0 - pooled) *
                              (1.0 / static_cast<double>(n_a) + 1.0 / static_cast<double>(n_b)));
  if (se == 0.0) return 0.0;
  return (pa - pb) / se;
}

}  // namespace qvote
