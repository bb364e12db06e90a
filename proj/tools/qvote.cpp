// Command-line front end: sweep the voting-simulation grid to CSV, print the
// analytic bounds table, or run the margin-of-victory agreement checks.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qvote/experiment.hpp"
#include "qvote/mov.hpp"
#include "qvote/mov_cases.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitAllInfeasible = 2;
constexpr int kExitIo = 3;

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) parts.push_back(item);
  return parts;
}

// Accepts "4,7,9" and "4..16" (inclusive range), or a mix of both.
std::vector<int> expand_int_list(const std::string& text) {
  std::vector<int> values;
  for (const std::string& part : split_commas(text)) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      values.push_back(std::stoi(part));
      continue;
    }
    const int lo = std::stoi(part.substr(0, dots));
    const int hi = std::stoi(part.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("empty range: " + part);
    for (int v = lo; v <= hi; ++v) values.push_back(v);
  }
  if (values.empty()) throw std::invalid_argument("empty list: " + text);
  return values;
}

std::vector<double> expand_double_list(const std::string& text) {
  std::vector<double> values;
  for (const std::string& part : split_commas(text)) values.push_back(std::stod(part));
  if (values.empty()) throw std::invalid_argument("empty list: " + text);
  return values;
}

struct OutputTarget {
  std::ostream* stream = &std::cout;
  std::unique_ptr<std::ofstream> file;

  bool open(const std::string& path) {
    if (path.empty()) return true;
    file = std::make_unique<std::ofstream>(path);
    if (!*file) return false;
    stream = file.get();
    return true;
  }
};

int run_sweep(const qvote::ExperimentConfig& cfg, const std::string& out_path) {
  OutputTarget out;
  if (!out.open(out_path)) {
    std::cerr << "error: cannot open output file: " << out_path << "\n";
    return kExitIo;
  }
  *out.stream << qvote::csv_header() << '\n';
  bool any_feasible = false;
  const auto sink = [&](const qvote::ExperimentRecord& rec) {
    any_feasible = any_feasible || rec.feasible;
    qvote::emit_csv_row(rec, *out.stream);
    out.stream->flush();  // long sweeps stay inspectable mid-run
  };
  const std::vector<qvote::ExperimentRecord> records = qvote::run_experiment(cfg, sink);
  if (!out.stream->good()) {
    std::cerr << "error: write failure on output\n";
    return kExitIo;
  }
  if (!records.empty() && !any_feasible) {
    std::cerr << "error: every grid cell was infeasible\n";
    return kExitAllInfeasible;
  }
  return kExitOk;
}

int run_bounds(double n, int m, const std::vector<double>& movs, const std::string& out_path) {
  OutputTarget out;
  if (!out.open(out_path)) {
    std::cerr << "error: cannot open output file: " << out_path << "\n";
    return kExitIo;
  }
  qvote::emit_bounds_csv(qvote::bounds_report(n, m, movs), *out.stream);
  return out.stream->good() ? kExitOk : kExitIo;
}

int run_mov_check() {
  int mismatches = 0;
  for (const qvote::MovCase& c : qvote::standard_mov_cases()) {
    const qvote::Histogram hist = qvote::make_profile(c.profile);
    const double designed = qvote::analytic_mov(c.profile);
    const int k_max = static_cast<int>(designed) + 2;
    const auto witness = qvote::brute_force_mov(c.rule, hist, k_max);
    const bool agree = witness && witness->moved_votes == static_cast<int>(designed);
    if (!agree) ++mismatches;
    std::cout << (agree ? "ok      " : "MISMATCH") << "  family=" << family_label(c.profile.family)
              << " rule=" << rule_label(c.rule) << " n=" << c.profile.n << " m=" << c.profile.m
              << " designed=" << designed << " brute="
              << (witness ? std::to_string(witness->moved_votes) : std::string("none<=") + std::to_string(k_max))
              << "\n";
  }
  std::cout << (mismatches == 0 ? "all margins agree\n"
                                : std::to_string(mismatches) + " mismatch(es)\n");
  return mismatches == 0 ? kExitOk : kExitConfig;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counting-based vs sampling-based election winner prediction"};
  app.require_subcommand(1);
  app.set_config("--config")->description("key=value file; command-line flags win");

  qvote::ExperimentConfig cfg;
  std::string rule_text = "plurality";
  std::string mov_text = "256,512,1024,2048,4096";
  std::string k_text = "1,3,5";
  std::string s_text = "4..16";
  std::string alg_text = "quantum,classical-with";
  std::string skip_text;
  std::string out_path;
  bool full_scale = false;
  bool no_wall_time = false;

  CLI::App* run = app.add_subcommand("run", "sweep the experiment grid and emit CSV");
  run->add_option("--rule", rule_text, "voting rule: plurality|borda|copeland|stv");
  run->add_option("--m", cfg.m, "number of candidates (2 or 4)");
  run->add_option("--n", cfg.n, "total vote weight");
  run->add_option("--mov", mov_text, "margins, comma-separated");
  run->add_option("--k", k_text, "repetition counts K, comma-separated");
  run->add_option("--s", s_text, "outcome-register widths, e.g. 4..16 or 4,8,12");
  auto* trials_opt = run->add_option("--trials", cfg.trials, "Monte-Carlo trials per cell");
  run->add_option("--alg", alg_text, "algorithms: quantum|classical-with|classical-without");
  run->add_option("--seed", cfg.base_seed, "base seed for the deterministic streams");
  run->add_option("--threads", cfg.threads, "worker threads (0: all cores)");
  run->add_option("--out", out_path, "output CSV path (default stdout)");
  run->add_option("--skip-cells", skip_text, "cell indices to skip, comma-separated");
  run->add_flag("--full-scale", full_scale, "use 100000 trials per cell unless --trials given");
  run->add_flag("--no-wall-time", no_wall_time, "zero the wall_ms column for byte-identical reruns");

  double bounds_n = 1048576.0;
  int bounds_m = 2;
  std::string bounds_mov_text = "256,512,1024,2048,4096";
  CLI::App* bounds = app.add_subcommand("bounds", "emit the analytic guarantees table as CSV");
  bounds->add_option("--n", bounds_n, "total vote weight");
  bounds->add_option("--m", bounds_m, "number of candidates");
  bounds->add_option("--mov", bounds_mov_text, "margins, comma-separated");
  bounds->add_option("--out", out_path, "output CSV path (default stdout)");

  app.add_subcommand("mov-check", "exhaustively validate the designed family margins");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (run->parsed()) {
      if (!qvote::parse_rule(rule_text, cfg.rule))
        throw std::invalid_argument("unknown rule: " + rule_text);
      cfg.mov_list = expand_double_list(mov_text);
      cfg.k_list = expand_int_list(k_text);
      cfg.s_list = expand_int_list(s_text);
      cfg.algorithms.clear();
      for (const std::string& name : split_commas(alg_text)) {
        qvote::AlgorithmKind kind;
        if (!qvote::parse_algorithm(name, kind))
          throw std::invalid_argument("unknown algorithm: " + name);
        cfg.algorithms.push_back(kind);
      }
      if (!skip_text.empty()) cfg.skip_cells = expand_int_list(skip_text);
      if (full_scale && trials_opt->count() == 0) cfg.trials = 100000;
      cfg.record_wall_time = !no_wall_time;
      qvote::validate(cfg);
      return run_sweep(cfg, out_path);
    }
    if (bounds->parsed())
      return run_bounds(bounds_n, bounds_m, expand_double_list(bounds_mov_text), out_path);
    return run_mov_check();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}
