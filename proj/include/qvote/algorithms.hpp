#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qvote/counting.hpp"
#include "qvote/histogram.hpp"
#include "qvote/rules.hpp"
#include "qvote/sampling.hpp"

namespace qvote {

struct CostReport {
  // Ballot-lookup runtime: K * 2^s for the counting election (each of the K
  // rounds runs a 2^s-step circuit), T for the sampling election.
  double runtime_units = 0.0;
  // Individual oracle queries: each s-bit counting circuit spends 2^s - 1
  // controlled iterate applications per histogram entry.
  double oracle_queries = 0.0;
};

struct VoteOutcome {
  int announced_winner = -1;
  std::vector<int> round_winners;  // counting election only; one entry per round
  CostReport cost;
};

namespace detail {

inline int plurality_of_rounds(const std::vector<int>& round_winners, int m, RandomStream& rng) {
  std::vector<int> count(static_cast<std::size_t>(m), 0);
  for (int c : round_winners) ++count[static_cast<std::size_t>(c)];
  int best = 0;
  for (int c : count) best = std::max(best, c);
  std::vector<int> top;
  for (int c = 0; c < m; ++c)
    if (count[static_cast<std::size_t>(c)] == best) top.push_back(c);
  if (top.size() == 1) return top[0];
  return top[static_cast<std::size_t>(rng.below(top.size()))];
}

}  // namespace detail

// Counting election: K independent counting rounds, each estimating the whole
// histogram and electing a round winner; the announced winner is the
// plurality of round winners (uniform tie-break).
inline VoteOutcome quantum_vote(const CountingModel& model, RuleId rule, int k_rounds,
                                RandomStream& rng) {
  if (k_rounds < 1) throw std::invalid_argument("quantum_vote: rounds must be >= 1");
  VoteOutcome out;
  out.round_winners.reserve(static_cast<std::size_t>(k_rounds));
  for (int k = 0; k < k_rounds; ++k) {
    const Histogram estimated = model.sample_round(rng);
    out.round_winners.push_back(winner(rule, estimated, rng));
  }
  out.announced_winner = detail::plurality_of_rounds(out.round_winners, model.profile().m, rng);
  const double grid = std::ldexp(1.0, model.params().s);
  const double bins = static_cast<double>(model.profile().weight.size());
  out.cost.runtime_units = static_cast<double>(k_rounds) * grid;
  out.cost.oracle_queries = static_cast<double>(k_rounds) * bins * (grid - 1.0);
  return out;
}

// Convenience overload; repeated trials should share one CountingModel.
inline VoteOutcome quantum_vote(const Histogram& hist, RuleId rule, int k_rounds, int s,
                                RandomStream& rng) {
  int t = 0;
  while (std::ldexp(1.0, t) < hist.total()) ++t;
  return quantum_vote(CountingModel(hist, CountingParams(t, s)), rule, k_rounds, rng);
}

// Sampling election: draw `samples` ballots (with or without replacement),
// apply the rule to the sampled histogram. Without replacement requires an
// integer histogram and samples <= total.
inline VoteOutcome classical_vote(const Histogram& hist, RuleId rule, std::int64_t samples,
                                  bool with_replacement, RandomStream& rng) {
  if (samples < 1) throw std::invalid_argument("classical_vote: samples must be >= 1");
  std::vector<std::int64_t> sampled;
  if (with_replacement) {
    sampled = sample_multinomial(samples, hist.weight, rng);
  } else {
    if (!hist.integral())
      throw std::invalid_argument("classical_vote: sampling without replacement needs integer weights");
    if (static_cast<double>(samples) > hist.total())
      throw std::invalid_argument("classical_vote: cannot draw more ballots than exist");
    std::vector<std::int64_t> counts(hist.weight.size());
    for (std::size_t j = 0; j < counts.size(); ++j)
      counts[j] = static_cast<std::int64_t>(std::llround(hist.weight[j]));
    sampled = sample_multivariate_hypergeometric(counts, samples, rng);
  }
  std::vector<double> w(sampled.size());
  for (std::size_t j = 0; j < w.size(); ++j) w[j] = static_cast<double>(sampled[j]);
  VoteOutcome out;
  out.announced_winner = winner(rule, Histogram(hist.m, std::move(w)), rng);
  out.cost.runtime_units = static_cast<double>(samples);
  out.cost.oracle_queries = static_cast<double>(samples);
  return out;
}

}  // namespace qvote
