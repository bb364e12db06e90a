#pragma once

#include <cmath>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "qvote/histogram.hpp"
#include "qvote/rules.hpp"

namespace qvote {

// Parameterized profile families with a designed margin of victory: candidate
// 0 wins, and moving `mov` votes is exactly enough to create a tie under the
// family's target rule. mov = 0 degenerates to a uniform (fully tied) profile.
enum class ProfileFamily { TwoCandidate, Plurality, Borda, DominantPair };

inline const char* family_label(ProfileFamily f) {
  switch (f) {
    case ProfileFamily::TwoCandidate: return "two-candidate";
    case ProfileFamily::Plurality: return "plurality-family";
    case ProfileFamily::Borda: return "borda-family";
    case ProfileFamily::DominantPair: return "dominant-pair";
  }
  return "?";
}

struct ProfileFamilySpec {
  ProfileFamily family = ProfileFamily::TwoCandidate;
  double n = 0;    // total vote weight
  int m = 2;       // candidate count
  double mov = 0;  // designed margin of victory
};

namespace detail {

inline void check_family_args(double n, double mov) {
  if (!(n > 0)) throw std::domain_error("profile: n must be positive");
  if (!(mov >= 0)) throw std::domain_error("profile: mov must be nonnegative");
}

}  // namespace detail

// m = 2: floor(n/2) + mov votes rank c0 first, the rest rank c1 first.
inline Histogram two_candidate_profile(double n, double mov) {
  detail::check_family_args(n, mov);
  const double lead = std::floor(n / 2) + mov;
  const double trail = std::ceil(n / 2) - mov;
  if (trail < 0) throw std::domain_error("two_candidate_profile: mov exceeds ceil(n/2)");
  return Histogram(2, {lead, trail});
}

// One ranking (c0 first, then c1, ..., in order) carries all of c0's lead;
// every other ranking gets the common base weight. c0's plurality tally leads
// the runner-up by exactly 2*mov.
inline Histogram plurality_profile(double n, int m, double mov) {
  detail::check_family_args(n, mov);
  const int bins = factorial(m);
  const double base = (n - 2 * mov) / bins;
  if (base < 0) throw std::domain_error("plurality_profile: mov exceeds n/2");
  std::vector<double> w(static_cast<std::size_t>(bins), base);
  w[0] = (n + 2 * (bins - 1) * mov) / bins;
  return Histogram(m, std::move(w));
}

// Every ranking with c0 on top is boosted by (m-1)*d above uniform, the rest
// sit d below, with d sized so the Borda gap closes after exactly mov moved
// votes (a moved vote swings the score gap by at most 2(m-1) points across
// (m-1)! affected rankings).
inline Histogram borda_profile(double n, int m, double mov) {
  detail::check_family_args(n, mov);
  if (m < 3) throw std::invalid_argument("borda_profile: needs m >= 3 (use two_candidate_profile for m = 2)");
  const int bins = factorial(m);
  const double d = 4 * mov / (factorial(m - 2) * m);
  const double low = (n - d) / bins;
  if (low < 0) throw std::domain_error("borda_profile: mov too large for n");
  const double high = (n + (m - 1) * d) / bins;
  const RankingTable& rt = rankings_of(m);
  std::vector<double> w(static_cast<std::size_t>(bins));
  for (int j = 0; j < bins; ++j)
    w[static_cast<std::size_t>(j)] = rt.top(j) == 0 ? high : low;
  return Histogram(m, std::move(w));
}

// Rankings that begin c0 > c1 share an extra 2*mov of weight above uniform;
// c0 then beats every rival head-to-head by exactly 2*mov, which fixes the
// margin for both Copeland and STV.
inline Histogram dominant_pair_profile(double n, int m, double mov) {
  detail::check_family_args(n, mov);
  if (m < 3) throw std::invalid_argument("dominant_pair_profile: needs m >= 3 (use two_candidate_profile for m = 2)");
  const int bins = factorial(m);
  const double base = (n - 2 * mov) / bins;
  if (base < 0) throw std::domain_error("dominant_pair_profile: mov exceeds n/2");
  const double boost = 2 * mov / factorial(m - 2);
  const RankingTable& rt = rankings_of(m);
  std::vector<double> w(static_cast<std::size_t>(bins));
  for (int j = 0; j < bins; ++j) {
    const auto& ord = rt.order[static_cast<std::size_t>(j)];
    w[static_cast<std::size_t>(j)] = (ord[0] == 0 && ord[1] == 1) ? base + boost : base;
  }
  return Histogram(m, std::move(w));
}

inline Histogram make_profile(const ProfileFamilySpec& spec) {
  switch (spec.family) {
    case ProfileFamily::TwoCandidate:
      if (spec.m != 2) throw std::invalid_argument("make_profile: two-candidate family requires m = 2");
      return two_candidate_profile(spec.n, spec.mov);
    case ProfileFamily::Plurality: return plurality_profile(spec.n, spec.m, spec.mov);
    case ProfileFamily::Borda: return borda_profile(spec.n, spec.m, spec.mov);
    case ProfileFamily::DominantPair: return dominant_pair_profile(spec.n, spec.m, spec.mov);
  }
  throw std::logic_error("make_profile: unknown family");
}

// Family whose designed margin targets the given rule at the given m. With
// two candidates all rules reduce to majority, so one family serves all.
inline ProfileFamily family_for(RuleId rule, int m) {
  if (m == 2) return ProfileFamily::TwoCandidate;
  switch (rule) {
    case RuleId::Plurality: return ProfileFamily::Plurality;
    case RuleId::Borda: return ProfileFamily::Borda;
    case RuleId::Copeland:
    case RuleId::Stv: return ProfileFamily::DominantPair;
  }
  throw std::logic_error("family_for: unknown rule");
}

}  // namespace qvote
