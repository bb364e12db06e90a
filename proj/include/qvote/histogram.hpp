#pragma once

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qvote/permutations.hpp"

namespace qvote {

// Anonymous preference profile: one nonnegative real weight per ranking of m
// candidates, indexed per rankings_of(m). Weights are reals so that estimated
// profiles (whose entries are count estimates) are first-class citizens.
struct Histogram {
  int m = 0;
  std::vector<double> weight;

  Histogram(int m_, std::vector<double> w) : m(m_), weight(std::move(w)) {
    if (m < kMinCandidates || m > kMaxCandidates)
      throw std::invalid_argument("Histogram: candidate count must be in [2, 6]");
    if (static_cast<int>(weight.size()) != factorial(m))
      throw std::invalid_argument("Histogram: weight vector must have m! entries");
    for (double v : weight)
      if (!(v >= 0.0))  // also rejects NaN
        throw std::invalid_argument("Histogram: weights must be nonnegative");
  }

  double total() const { return std::accumulate(weight.begin(), weight.end(), 0.0); }

  bool integral(double tol = 1e-9) const {
    for (double v : weight)
      if (std::fabs(v - std::round(v)) > tol) return false;
    return true;
  }
};

// Adds the same weight c to every ranking. Errors instead of producing a
// negative entry.
inline Histogram shift_histogram(const Histogram& h, double c) {
  std::vector<double> w = h.weight;
  for (double& v : w) {
    v += c;
    if (v < 0.0) throw std::domain_error("shift_histogram: shift would make an entry negative");
  }
  return Histogram(h.m, std::move(w));
}

inline Histogram scale_histogram(const Histogram& h, double factor) {
  if (!(factor > 0.0)) throw std::domain_error("scale_histogram: factor must be positive");
  std::vector<double> w = h.weight;
  for (double& v : w) v *= factor;
  return Histogram(h.m, std::move(w));
}

}  // namespace qvote
