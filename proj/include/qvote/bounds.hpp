#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "qvote/permutations.hpp"

namespace qvote {

// Closed-form guarantees relating outcome-register width, round count, and
// classical sample complexity to the target failure probability epsilon.

inline int ceil_log2(double n) {
  if (!(n >= 1.0)) throw std::domain_error("ceil_log2: argument must be >= 1");
  int t = static_cast<int>(std::ceil(std::log2(n)));
  while (std::ldexp(1.0, t) < n) ++t;
  while (t > 0 && std::ldexp(1.0, t - 1) >= n) --t;
  return t;
}

// Smallest guaranteed-sufficient outcome width: with s = sigma(...) bits, a
// single counting round elects the true winner with probability >= 1 - eps
// on any profile with the given margin.
inline int sigma(double epsilon, double n, int m, double mov) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::domain_error("sigma: epsilon must be in (0, 1)");
  if (m < kMinCandidates || m > kMaxCandidates) throw std::invalid_argument("sigma: m out of range");
  if (!(mov > 0.0)) throw std::domain_error("sigma: mov must be positive");
  const int t = ceil_log2(n);
  const double bins = factorial(m);
  const double inner = static_cast<double>(t) + std::log2(bins / (2 * epsilon) + 2) +
                       std::log2(std::numbers::pi * bins) - std::log2(mov);
  return 2 + static_cast<int>(std::ceil(inner));
}

// Round count for the majority-of-rounds amplification to reach failure
// probability epsilon when each round succeeds with probability >= 3/4.
inline int rounds_for(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::domain_error("rounds_for: epsilon must be in (0, 1)");
  return static_cast<int>(std::floor(24.0 * -std::log(epsilon))) + 1;
}

// Tail mass of the s-bit estimator beyond distance 2^-s + delta from the
// phase. Only meaningful for delta > 2^-s.
inline double quantum_tail_bound(int s, double delta) {
  if (!(delta > std::ldexp(1.0, -s)))
    throw std::domain_error("quantum_tail_bound: delta must exceed 2^-s");
  return 1.0 / (2.0 * (delta * std::ldexp(1.0, s) - 1.0));
}

// Interval of slack values delta that simultaneously keep the per-entry tail
// mass below eps/m! and the resulting count distortion below mov/m!. Empty
// when s is too small for the (n, m, mov, eps) combination.
struct DeltaWindow {
  double lo = 0.0;
  double hi = 0.0;
};

inline std::optional<DeltaWindow> delta_window(int s, double epsilon, double n, int m, double mov) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::domain_error("delta_window: epsilon must be in (0, 1)");
  if (m < kMinCandidates || m > kMaxCandidates) throw std::invalid_argument("delta_window: m out of range");
  if (!(mov > 0.0)) throw std::domain_error("delta_window: mov must be positive");
  const int t = ceil_log2(n);
  const double bins = factorial(m);
  const double lo = std::ldexp(bins / (2 * epsilon) + 1, -s);
  const double hi = mov / (std::ldexp(1.0, t + 1) * std::numbers::pi * bins) - std::ldexp(1.0, -s);
  if (!(lo < hi)) return std::nullopt;
  return DeltaWindow{lo, hi};
}

inline double binary_entropy(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("binary_entropy: p must be in (0, 1)");
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

namespace detail {

// Continuous extension with H(0) = H(1) = 0, for limit parameter values.
inline double entropy_extended(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return binary_entropy(p);
}

}  // namespace detail

// Information-theoretic floor on the sample count any classical sampling
// election needs to reach failure probability epsilon on a two-candidate
// profile with the given margin. `exact` uses the channel capacity of the
// vote-sampling channel; `loose` replaces the capacity by its quadratic
// upper bound 4 mov^2 / n^2.
struct SampleLowerBound {
  double exact = 0.0;
  double loose = 0.0;
};

inline SampleLowerBound classical_sample_lower_bound(double n, double mov, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::domain_error("classical_sample_lower_bound: epsilon must be in (0, 1)");
  if (!(n >= 2.0)) throw std::domain_error("classical_sample_lower_bound: n must be >= 2");
  if (!(mov > 0.0 && mov <= n / 2))
    throw std::domain_error("classical_sample_lower_bound: mov must be in (0, n/2]");
  const double p_win = (std::floor(n / 2) + mov) / n;
  const double capacity = 1.0 - detail::entropy_extended(p_win);
  const double rate = 1.0 - detail::entropy_extended(epsilon);
  SampleLowerBound out;
  out.exact = rate / capacity;
  out.loose = rate * n * n / (4.0 * mov * mov);
  return out;
}

}  // namespace qvote
