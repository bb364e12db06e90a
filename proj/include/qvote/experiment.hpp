#pragma once

#include <charconv>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "qvote/algorithms.hpp"
#include "qvote/bounds.hpp"
#include "qvote/counting.hpp"
#include "qvote/profiles.hpp"
#include "qvote/random.hpp"
#include "qvote/rules.hpp"
#include "qvote/stats.hpp"

namespace qvote {

enum class AlgorithmKind { Quantum, ClassicalWith, ClassicalWithout };

inline const char* algorithm_label(AlgorithmKind a) {
  switch (a) {
    case AlgorithmKind::Quantum: return "quantum";
    case AlgorithmKind::ClassicalWith: return "classical-with";
    case AlgorithmKind::ClassicalWithout: return "classical-without";
  }
  return "?";
}

inline bool parse_algorithm(std::string_view text, AlgorithmKind& out) {
  if (text == "quantum") out = AlgorithmKind::Quantum;
  else if (text == "classical" || text == "classical-with") out = AlgorithmKind::ClassicalWith;
  else if (text == "classical-without") out = AlgorithmKind::ClassicalWithout;
  else return false;
  return true;
}

// Shortest decimal form that parses back to the same double.
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

struct ExperimentConfig {
  RuleId rule = RuleId::Plurality;
  int m = 2;
  double n = 1048576.0;  // 2^20
  std::vector<double> mov_list = {256, 512, 1024, 2048, 4096};
  std::vector<int> k_list = {1, 3, 5};
  std::vector<int> s_list = {4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16};
  std::int64_t trials = 10000;
  std::vector<AlgorithmKind> algorithms = {AlgorithmKind::Quantum, AlgorithmKind::ClassicalWith};
  std::uint64_t base_seed = 42;
  int threads = 0;              // 0: hardware concurrency
  bool record_wall_time = true; // off: wall_ms column reads 0 so reruns are byte-identical
  std::vector<int> skip_cells;  // cell indices to omit (resume support)
};

inline void validate(const ExperimentConfig& cfg) {
  if (cfg.m != 2 && cfg.m != 4) throw std::invalid_argument("config: m must be 2 or 4");
  if (!(cfg.n >= 2)) throw std::invalid_argument("config: n must be >= 2");
  if (cfg.trials < 100) throw std::invalid_argument("config: trials must be >= 100");
  if (cfg.mov_list.empty()) throw std::invalid_argument("config: mov list is empty");
  for (double mov : cfg.mov_list)
    if (!(mov >= 0)) throw std::invalid_argument("config: mov values must be nonnegative");
  if (cfg.k_list.empty()) throw std::invalid_argument("config: K list is empty");
  for (int k : cfg.k_list)
    if (k < 1) throw std::invalid_argument("config: K values must be >= 1");
  if (cfg.s_list.empty()) throw std::invalid_argument("config: s list is empty");
  for (int s : cfg.s_list)
    if (s < 2 || s > 20) throw std::invalid_argument("config: s values must be in [2, 20]");
  if (cfg.algorithms.empty()) throw std::invalid_argument("config: algorithm list is empty");
  if (cfg.threads < 0) throw std::invalid_argument("config: threads must be >= 0");
}

struct ExperimentRecord {
  int cell_index = 0;
  bool feasible = true;  // infeasible rows are emitted with trials = 0
  std::string rule;
  int m = 0;
  double n = 0;
  double mov = 0;
  int k_rounds = 0;
  int s = 0;
  std::string algorithm;
  std::int64_t trials = 0;
  std::int64_t correct = 0;
  double pr_correct = 0;
  double ci_half_width = 0;
  double runtime_units = 0;
  double wall_ms = 0;
};

inline std::string csv_header() {
  return "rule,m,n,mov,K,s,algorithm,trials,correct,pr_correct,ci_half_width,runtime_units,wall_ms";
}

inline void emit_csv_row(const ExperimentRecord& r, std::ostream& os) {
  os << r.rule << ',' << r.m << ',' << format_double(r.n) << ',' << format_double(r.mov) << ','
     << r.k_rounds << ',' << r.s << ',' << r.algorithm << ',' << r.trials << ',' << r.correct
     << ',' << format_double(r.pr_correct) << ',' << format_double(r.ci_half_width) << ','
     << format_double(r.runtime_units) << ',' << format_double(r.wall_ms) << '\n';
}

inline void emit_csv(const std::vector<ExperimentRecord>& records, std::ostream& os) {
  os << csv_header() << '\n';
  for (const ExperimentRecord& r : records) emit_csv_row(r, os);
}

namespace detail {

inline std::string cell_identity(const ExperimentRecord& r) {
  std::ostringstream id;
  id << r.rule << '|' << r.m << '|' << format_double(r.n) << '|' << format_double(r.mov) << '|'
     << r.k_rounds << '|' << r.s << '|' << r.algorithm;
  return id.str();
}

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs `trials` trials partitioned across threads; the per-trial stream seed
// depends only on (base_seed, cell, trial), so the partition never shows.
template <class Trial>
std::int64_t count_correct(std::int64_t trials, int nthreads, std::uint64_t base_seed,
                           std::uint64_t cell_hash, Trial&& trial_fn) {
  if (nthreads <= 1) {
    std::int64_t correct = 0;
    for (std::int64_t i = 0; i < trials; ++i) {
      RandomStream rng = stream_for(base_seed, cell_hash, static_cast<std::uint64_t>(i));
      correct += trial_fn(rng) ? 1 : 0;
    }
    return correct;
  }
  std::vector<std::int64_t> partial(static_cast<std::size_t>(nthreads), 0);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(nthreads));
  for (int tid = 0; tid < nthreads; ++tid) {
    pool.emplace_back([&, tid] {
      std::int64_t local = 0;
      for (std::int64_t i = tid; i < trials; i += nthreads) {
        RandomStream rng = stream_for(base_seed, cell_hash, static_cast<std::uint64_t>(i));
        local += trial_fn(rng) ? 1 : 0;
      }
      partial[static_cast<std::size_t>(tid)] = local;
    });
  }
  for (std::thread& th : pool) th.join();
  std::int64_t correct = 0;
  for (std::int64_t c : partial) correct += c;
  return correct;
}

}  // namespace detail

// Sweeps the full (mov, K, s, algorithm) grid in deterministic order. Every
// combination yields one record (flagged with trials = 0 when the profile or
// sampling mode is infeasible), forwarded to on_record as soon as its cell
// completes so long sweeps can stream to disk.
inline std::vector<ExperimentRecord> run_experiment(
    const ExperimentConfig& cfg,
    const std::function<void(const ExperimentRecord&)>& on_record = {}) {
  validate(cfg);
  const int nthreads = detail::resolve_threads(cfg.threads);
  const std::set<int> skip(cfg.skip_cells.begin(), cfg.skip_cells.end());
  std::vector<ExperimentRecord> records;
  int cell_index = 0;

  for (double mov : cfg.mov_list) {
    std::optional<Histogram> profile;
    try {
      profile = make_profile({family_for(cfg.rule, cfg.m), cfg.n, cfg.m, mov});
    } catch (const std::domain_error&) {
      profile.reset();  // infeasible at this margin; cells emit flagged rows
    }
    const int t = ceil_log2(cfg.n);

    for (int k_rounds : cfg.k_list) {
      for (int s : cfg.s_list) {
        for (AlgorithmKind alg : cfg.algorithms) {
          ExperimentRecord rec;
          rec.cell_index = cell_index++;
          rec.rule = rule_label(cfg.rule);
          rec.m = cfg.m;
          rec.n = cfg.n;
          rec.mov = mov;
          rec.k_rounds = k_rounds;
          rec.s = s;
          rec.algorithm = algorithm_label(alg);
          rec.runtime_units = static_cast<double>(k_rounds) * std::ldexp(1.0, s);
          if (skip.count(rec.cell_index)) continue;

          const std::int64_t samples =
              static_cast<std::int64_t>(static_cast<double>(k_rounds) * std::ldexp(1.0, s));
          bool feasible = profile.has_value();
          if (feasible && alg == AlgorithmKind::ClassicalWithout)
            feasible = profile->integral() && static_cast<double>(samples) <= profile->total();

          if (!feasible) {
            rec.feasible = false;
            records.push_back(rec);
            if (on_record) on_record(records.back());
            continue;
          }

          const std::uint64_t cell_hash = fnv1a(detail::cell_identity(rec));
          const auto started = std::chrono::steady_clock::now();
          std::int64_t correct = 0;
          if (alg == AlgorithmKind::Quantum) {
            const CountingModel model(*profile, CountingParams(t, s));
            correct = detail::count_correct(
                cfg.trials, nthreads, cfg.base_seed, cell_hash, [&](RandomStream& rng) {
                  return quantum_vote(model, cfg.rule, k_rounds, rng).announced_winner == 0;
                });
          } else {
            const bool with_replacement = alg == AlgorithmKind::ClassicalWith;
            correct = detail::count_correct(
                cfg.trials, nthreads, cfg.base_seed, cell_hash, [&](RandomStream& rng) {
                  return classical_vote(*profile, cfg.rule, samples, with_replacement, rng)
                             .announced_winner == 0;
                });
          }
          const auto finished = std::chrono::steady_clock::now();

          rec.trials = cfg.trials;
          rec.correct = correct;
          rec.pr_correct = static_cast<double>(correct) / static_cast<double>(cfg.trials);
          rec.ci_half_width = wilson_half_width(correct, cfg.trials);
          if (cfg.record_wall_time)
            rec.wall_ms = std::chrono::duration<double, std::milli>(finished - started).count();
          records.push_back(rec);
          if (on_record) on_record(records.back());
        }
      }
    }
  }
  return records;
}

// Side-by-side table of the analytic guarantees for each margin: the
// guaranteed-sufficient counting width, the round count per target failure
// probability, the classical sample floor, and the headline n/mov ratio.
struct BoundsReportRow {
  double n = 0;
  double mov = 0;
  double epsilon = 0;
  int sigma_bits = 0;
  int k_rounds = 0;
  double lb_exact = 0;
  double lb_loose = 0;
  double speedup_ratio = 0;
};

inline std::vector<BoundsReportRow> bounds_report(double n, int m, const std::vector<double>& mov_list) {
  static constexpr double kEpsilons[] = {0.25, 0.1, 0.01};
  std::vector<BoundsReportRow> rows;
  for (double mov : mov_list) {
    for (double eps : kEpsilons) {
      BoundsReportRow row;
      row.n = n;
      row.mov = mov;
      row.epsilon = eps;
      row.sigma_bits = sigma(eps, n, m, mov);
      row.k_rounds = rounds_for(eps);
      const SampleLowerBound lb = classical_sample_lower_bound(n, mov, eps);
      row.lb_exact = lb.exact;
      row.lb_loose = lb.loose;
      row.speedup_ratio = n / mov;
      rows.push_back(row);
    }
  }
  return rows;
}

inline void emit_bounds_csv(const std::vector<BoundsReportRow>& rows, std::ostream& os) {
  os << "n,mov,epsilon,sigma_s,k_rounds,classical_lb_exact,classical_lb_loose,speedup_ratio\n";
  for (const BoundsReportRow& r : rows) {
    os << format_double(r.n) << ',' << format_double(r.mov) << ',' << format_double(r.epsilon)
       << ',' << r.sigma_bits << ',' << r.k_rounds << ',' << format_double(r.lb_exact) << ','
       << format_double(r.lb_loose) << ',' << format_double(r.speedup_ratio) << '\n';
  }
}

}  // namespace qvote
