#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qvote/histogram.hpp"
#include "qvote/profiles.hpp"
#include "qvote/rules.hpp"

namespace qvote {

// Margin of victory: the least number of voters who can change the announced
// outcome by voting differently. A tie with another candidate counts as a
// change.

struct MovWitness {
  int moved_votes = 0;
  std::vector<double> histogram;  // the winner-changing profile found
};

namespace detail {

// Exhaustive search at one distance level k: remove a k-vote composition from
// the histogram (respecting capacities), add a k-vote composition on disjoint
// bins, and test the winner set. Disjoint supports keep the L1 distance at
// exactly 2k, so sweeping k upward finds the minimum.
class MovSearch {
 public:
  MovSearch(RuleId rule, const Histogram& hist, int sole_winner)
      : rule_(rule), m_(hist.m), sole_winner_(sole_winner), work_(hist.weight),
        cap_(hist.weight.size()), touched_(hist.weight.size(), false) {
    // Removal cap per bin: largest whole number of votes that keeps the bin
    // nonnegative (entries need not be integers; moves always are).
    for (std::size_t j = 0; j < cap_.size(); ++j)
      cap_[j] = static_cast<int>(std::floor(hist.weight[j] + 1e-9));
  }

  bool found_change_at(int k, MovWitness& out) {
    k_ = k;
    out_ = &out;
    return take_from(0, k);
  }

 private:
  bool take_from(std::size_t bin, int left) {
    if (left == 0) return give_to(0, k_);
    if (bin == work_.size()) return false;
    const int most = std::min(left, cap_[bin]);
    for (int q = 0; q <= most; ++q) {
      work_[bin] -= q;
      touched_[bin] = q > 0;
      if (take_from(bin + 1, left - q)) return true;
      work_[bin] += q;
    }
    touched_[bin] = false;
    return false;
  }

  bool give_to(std::size_t bin, int left) {
    if (left == 0) return changed();
    if (bin == work_.size()) return false;
    if (touched_[bin]) return give_to(bin + 1, left);  // keep supports disjoint
    for (int q = 0; q <= left; ++q) {
      work_[bin] += q;
      if (give_to(bin + 1, left - q)) return true;
      work_[bin] -= q;
    }
    return false;
  }

  bool changed() {
    const WinnerSet ws = winner_set(rule_, Histogram(m_, work_));
    if (ws.size() == 1 && ws[0] == sole_winner_) return false;
    out_->moved_votes = k_;
    out_->histogram = work_;
    return true;
  }

  RuleId rule_;
  int m_;
  int sole_winner_;
  std::vector<double> work_;
  std::vector<int> cap_;
  std::vector<bool> touched_;
  int k_ = 0;
  MovWitness* out_ = nullptr;
};

}  // namespace detail

// Smallest k <= k_max whose integer redistribution changes the winner set, or
// nullopt if k_max is exhausted without a change. Histogram entries may be
// fractional; the moved mass is always a whole number of votes per bin.
// Requires a unique initial winner.
inline std::optional<MovWitness> brute_force_mov(RuleId rule, const Histogram& hist, int k_max) {
  if (k_max < 1) throw std::invalid_argument("brute_force_mov: k_max must be >= 1");
  const WinnerSet base = winner_set(rule, hist);
  if (base.size() != 1)
    throw std::invalid_argument("brute_force_mov: initial winner set must be a singleton");
  detail::MovSearch search(rule, hist, base[0]);
  for (int k = 1; k <= k_max; ++k) {
    MovWitness w;
    if (search.found_change_at(k, w)) return w;
  }
  return std::nullopt;
}

// Designed margin of a family construction; cross-checked against
// brute_force_mov on small instances (see the margin agreement tests).
inline double analytic_mov(const ProfileFamilySpec& spec) { return spec.mov; }

}  // namespace qvote
