#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "qvote/histogram.hpp"
#include "qvote/permutations.hpp"
#include "qvote/random.hpp"

namespace qvote {

enum class RuleId { Plurality, Borda, Copeland, Stv };

inline const char* rule_label(RuleId r) {
  switch (r) {
    case RuleId::Plurality: return "plurality";
    case RuleId::Borda: return "borda";
    case RuleId::Copeland: return "copeland";
    case RuleId::Stv: return "stv";
  }
  return "?";
}

inline bool parse_rule(std::string_view text, RuleId& out) {
  if (text == "plurality") out = RuleId::Plurality;
  else if (text == "borda") out = RuleId::Borda;
  else if (text == "copeland") out = RuleId::Copeland;
  else if (text == "stv") out = RuleId::Stv;
  else return false;
  return true;
}

// Sorted candidate indices; never empty.
using WinnerSet = std::vector<int>;

// Scores within this relative tolerance of each other count as tied. Weights
// are reals, so exact comparison would turn rounding noise into verdicts.
inline constexpr double kTieRelTol = 1e-9;

namespace detail {

inline bool scores_tied(double a, double b) {
  return std::fabs(a - b) <= kTieRelTol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

inline WinnerSet argmax_set(const std::vector<double>& score) {
  const double best = *std::max_element(score.begin(), score.end());
  WinnerSet out;
  for (int c = 0; c < static_cast<int>(score.size()); ++c)
    if (scores_tied(score[static_cast<std::size_t>(c)], best)) out.push_back(c);
  return out;
}

inline std::vector<int> argmin_indices(const std::vector<double>& score,
                                       const std::vector<int>& among) {
  double worst = score[static_cast<std::size_t>(among.front())];
  for (int c : among) worst = std::min(worst, score[static_cast<std::size_t>(c)]);
  std::vector<int> out;
  for (int c : among)
    if (scores_tied(score[static_cast<std::size_t>(c)], worst)) out.push_back(c);
  return out;
}

// Top-choice tallies restricted to the candidates with standing = true.
inline std::vector<double> standing_tallies(const Histogram& h, const std::vector<bool>& standing) {
  const RankingTable& rt = rankings_of(h.m);
  std::vector<double> tally(static_cast<std::size_t>(h.m), 0.0);
  for (int j = 0; j < rt.size(); ++j) {
    for (int p = 0; p < h.m; ++p) {
      const int c = rt.order[static_cast<std::size_t>(j)][static_cast<std::size_t>(p)];
      if (standing[static_cast<std::size_t>(c)]) {
        tally[static_cast<std::size_t>(c)] += h.weight[static_cast<std::size_t>(j)];
        break;
      }
    }
  }
  return tally;
}

}  // namespace detail

inline WinnerSet plurality_winner_set(const Histogram& h) {
  const RankingTable& rt = rankings_of(h.m);
  std::vector<double> tally(static_cast<std::size_t>(h.m), 0.0);
  for (int j = 0; j < rt.size(); ++j)
    tally[static_cast<std::size_t>(rt.top(j))] += h.weight[static_cast<std::size_t>(j)];
  return detail::argmax_set(tally);
}

// Position p earns m-1-p points.
inline WinnerSet borda_winner_set(const Histogram& h) {
  const RankingTable& rt = rankings_of(h.m);
  std::vector<double> score(static_cast<std::size_t>(h.m), 0.0);
  for (int j = 0; j < rt.size(); ++j)
    for (int c = 0; c < h.m; ++c)
      score[static_cast<std::size_t>(c)] +=
          h.weight[static_cast<std::size_t>(j)] *
          static_cast<double>(h.m - 1 - rt.position[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)]);
  return detail::argmax_set(score);
}

// 1 point per pairwise win, 1/2 per pairwise tie.
inline WinnerSet copeland_winner_set(const Histogram& h) {
  const RankingTable& rt = rankings_of(h.m);
  std::vector<double> pref(static_cast<std::size_t>(h.m * h.m), 0.0);
  for (int j = 0; j < rt.size(); ++j) {
    const auto& pos = rt.position[static_cast<std::size_t>(j)];
    const double w = h.weight[static_cast<std::size_t>(j)];
    for (int a = 0; a < h.m; ++a)
      for (int b = a + 1; b < h.m; ++b) {
        if (pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(b)])
          pref[static_cast<std::size_t>(a * h.m + b)] += w;
        else
          pref[static_cast<std::size_t>(b * h.m + a)] += w;
      }
  }
  std::vector<double> points(static_cast<std::size_t>(h.m), 0.0);
  for (int a = 0; a < h.m; ++a)
    for (int b = a + 1; b < h.m; ++b) {
      const double ab = pref[static_cast<std::size_t>(a * h.m + b)];
      const double ba = pref[static_cast<std::size_t>(b * h.m + a)];
      if (detail::scores_tied(ab, ba)) {
        points[static_cast<std::size_t>(a)] += 0.5;
        points[static_cast<std::size_t>(b)] += 0.5;
      } else if (ab > ba) {
        points[static_cast<std::size_t>(a)] += 1.0;
      } else {
        points[static_cast<std::size_t>(b)] += 1.0;
      }
    }
  return detail::argmax_set(points);
}

struct StvResult {
  int winner = -1;
  std::vector<int> elimination_order;
};

// One single-transferable-vote run: m-1 rounds, each eliminating a candidate
// with the lowest top-choice tally among those standing; each ranking's weight
// counts toward its highest-ranked standing candidate. Ties for elimination
// are broken uniformly at random (randomness consumed only on actual ties).
inline StvResult stv_run(const Histogram& h, RandomStream& elim_randomness) {
  std::vector<bool> standing(static_cast<std::size_t>(h.m), true);
  StvResult res;
  for (int round = 0; round < h.m - 1; ++round) {
    const std::vector<double> tally = detail::standing_tallies(h, standing);
    std::vector<int> alive;
    for (int c = 0; c < h.m; ++c)
      if (standing[static_cast<std::size_t>(c)]) alive.push_back(c);
    const std::vector<int> lowest = detail::argmin_indices(tally, alive);
    const int victim = lowest.size() == 1
                           ? lowest[0]
                           : lowest[static_cast<std::size_t>(elim_randomness.below(lowest.size()))];
    standing[static_cast<std::size_t>(victim)] = false;
    res.elimination_order.push_back(victim);
  }
  for (int c = 0; c < h.m; ++c)
    if (standing[static_cast<std::size_t>(c)]) res.winner = c;
  return res;
}

namespace detail {

// Explores every resolution of elimination ties, deduplicating on the mask of
// standing candidates (at most 2^m states, m <= 6).
inline void stv_explore(const Histogram& h, unsigned mask, std::vector<bool>& seen,
                        std::vector<bool>& winners) {
  if (seen[mask]) return;
  seen[mask] = true;
  std::vector<bool> standing(static_cast<std::size_t>(h.m));
  std::vector<int> alive;
  for (int c = 0; c < h.m; ++c)
    if (mask & (1u << c)) {
      standing[static_cast<std::size_t>(c)] = true;
      alive.push_back(c);
    }
  if (alive.size() == 1) {
    winners[static_cast<std::size_t>(alive[0])] = true;
    return;
  }
  const std::vector<double> tally = standing_tallies(h, standing);
  for (int victim : argmin_indices(tally, alive))
    stv_explore(h, mask & ~(1u << victim), seen, winners);
}

}  // namespace detail

// Candidates that win under at least one resolution of elimination ties.
inline WinnerSet stv_winner_set(const Histogram& h) {
  std::vector<bool> seen(1u << h.m, false);
  std::vector<bool> winners(static_cast<std::size_t>(h.m), false);
  detail::stv_explore(h, (1u << h.m) - 1u, seen, winners);
  WinnerSet out;
  for (int c = 0; c < h.m; ++c)
    if (winners[static_cast<std::size_t>(c)]) out.push_back(c);
  return out;
}

inline WinnerSet winner_set(RuleId rule, const Histogram& h) {
  switch (rule) {
    case RuleId::Plurality: return plurality_winner_set(h);
    case RuleId::Borda: return borda_winner_set(h);
    case RuleId::Copeland: return copeland_winner_set(h);
    case RuleId::Stv: return stv_winner_set(h);
  }
  throw std::logic_error("winner_set: unknown rule");
}

// Single winner under the rule. Plurality/Borda/Copeland pick uniformly from
// the winner set; STV resolves elimination ties uniformly within one run.
// Randomness is consumed only when a tie actually occurs.
inline int winner(RuleId rule, const Histogram& h, RandomStream& tie_randomness) {
  if (rule == RuleId::Stv) return stv_run(h, tie_randomness).winner;
  const WinnerSet ws = winner_set(rule, h);
  if (ws.size() == 1) return ws[0];
  return ws[static_cast<std::size_t>(tie_randomness.below(ws.size()))];
}

}  // namespace qvote
