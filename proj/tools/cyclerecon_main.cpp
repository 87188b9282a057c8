// Command-line front end: reconfigurability decisions, component charts,
// string utilities, the exhaustive oracle, the batch verification sweep and
// a matcher benchmark.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <thread>

#include "cyclerecon/engine.hpp"
#include "cyclerecon/hom.hpp"
#include "cyclerecon/hom_graph.hpp"
#include "cyclerecon/instance_io.hpp"
#include "cyclerecon/json_out.hpp"
#include "cyclerecon/orientation.hpp"
#include "cyclerecon/star_match.hpp"

namespace {

using namespace cyclerecon;
using nlohmann::ordered_json;

constexpr int kExitConnected = 0;
constexpr int kExitNotConnected = 1;
constexpr int kExitError = 2;

ClassMode parse_class_mode(const std::string& text) {
  if (text == "pushup") return ClassMode::PushUp;
  if (text == "base") return ClassMode::Base;
  throw CLI::ValidationError("--class-mode", "expected 'pushup' or 'base'");
}

int run_decide(const std::string& path, const std::string& mode_text) {
  const InstanceFile inst = load_instance_file(path);
  const CycleHom phi = validate_hom(inst.source, inst.target, inst.phi);
  const CycleHom psi = validate_hom(inst.source, inst.target, inst.psi);
  const Decision d =
      decide(inst.source, inst.target, phi, psi, parse_class_mode(mode_text));
  std::cout << to_json(d).dump(2) << "\n";
  return d.connected ? kExitConnected : kExitNotConnected;
}

int run_characterize(const std::string& target_text,
                     const std::string& source_text, bool debug) {
  const auto target = OrientationString::parse(target_text);
  const auto source = OrientationString::parse(source_text);
  const ComponentReport rep = characterize(source, target);
  ordered_json j = to_json(rep);
  if (debug && !rep.contractible) {
    // per-rotation stream counts, with both division readings of the power
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < rep.s; ++i) {
      const StreamCount c = greedy_stream_count(shift(rep.root, i), source);
      ordered_json row;
      row["shift"] = i;
      row["matched"] = c.matched;
      row["power_floor"] = c.matched / rep.s;
      row["power_ceil"] = (c.matched + rep.s - 1) / rep.s;
      rows.push_back(std::move(row));
    }
    j["debug_stream_counts"] = std::move(rows);
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_root(const std::string& text) {
  const RootFactorization fac = primitive_root(OrientationString::parse(text));
  std::cout << fac.root.str() << " " << fac.multiplicity << "\n";
  return 0;
}

int run_match(const std::string& pattern_text, const std::string& text_text) {
  const auto pattern = OrientationString::parse(pattern_text);
  const auto text = OrientationString::parse(text_text);
  const auto sel = leftmost_embedding(pattern, text);
  if (!sel) {
    std::cout << "none\n";
    return 0;
  }
  for (std::size_t i = 0; i < sel->size(); ++i)
    std::cout << (i ? "," : "") << (*sel)[i];
  std::cout << "\n";
  return 0;
}

int run_enumerate(const std::string& target_text, const std::string& source_text,
                  bool monotone_only, bool has_wind, int wind_filter,
                  std::size_t cap) {
  const auto target = OrientationString::parse(target_text);
  const auto source = OrientationString::parse(source_text);
  const auto homs = enumerate_homs(source, target, cap);
  ordered_json rows = ordered_json::array();
  for (const auto& images : homs) {
    const CycleHom h{source, target, images};
    if (has_wind && wind(h) != wind_filter) continue;
    if (monotone_only) {
      const Monotonicity mono = monotonicity(h);
      if (mono != Monotonicity::Increasing && mono != Monotonicity::Decreasing)
        continue;
    }
    rows.push_back(hom_row(h));
  }
  std::cout << rows.dump(2) << "\n";
  return 0;
}

int run_oracle(const std::string& target_text, const std::string& source_text,
               const std::string& dot_path, std::size_t cap) {
  const auto target = OrientationString::parse(target_text);
  const auto source = OrientationString::parse(source_text);
  const HomGraph g = build_hom_graph(source, target, cap);
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out) throw std::runtime_error("cannot write " + dot_path);
    out << export_dot(g);
  }
  std::cout << hom_graph_summary(g).dump(2) << "\n";
  return 0;
}

// Every source length 3..max_m crossed with every non-contractible target
// length 3..max_n, split over a worker pool; results are merged in instance
// order so the output does not depend on the parallelism.
int run_verify(std::size_t max_m, std::size_t max_n, unsigned jobs,
               const std::string& mode_text) {
  const ClassMode mode = parse_class_mode(mode_text);
  std::vector<std::pair<std::string, std::string>> instances;
  std::vector<std::string> targets;
  for (std::size_t n = 3; n <= max_n; ++n) {
    if (n == 3) {
      targets.push_back("+++");
      targets.push_back("---");
      continue;
    }
    std::string t(n, '+');
    const char symbols[3] = {'+', '-', '*'};
    std::vector<std::size_t> digit(n, 0);
    for (;;) {
      for (std::size_t i = 0; i < n; ++i) t[i] = symbols[digit[i]];
      targets.push_back(t);
      std::size_t i = 0;
      while (i < n && ++digit[i] == 3) digit[i++] = 0;
      if (i == n) break;
    }
  }
  for (std::size_t m = 3; m <= max_m; ++m) {
    std::string c(m, '+');
    const char symbols[3] = {'+', '-', '*'};
    std::vector<std::size_t> digit(m, 0);
    for (;;) {
      for (std::size_t i = 0; i < m; ++i) c[i] = symbols[digit[i]];
      for (const auto& t : targets) instances.emplace_back(c, t);
      std::size_t i = 0;
      while (i < m && ++digit[i] == 3) digit[i++] = 0;
      if (i == m) break;
    }
  }

  std::vector<std::size_t> mismatch_counts(instances.size(), 0);
  std::vector<std::string> first_message(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= instances.size()) return;
      const auto& [c, t] = instances[idx];
      const VerifyReport rep = verify_instance(
          OrientationString::parse(c), OrientationString::parse(t), mode);
      mismatch_counts[idx] = rep.mismatch_total;
      if (!rep.mismatches.empty()) first_message[idx] = rep.mismatches.front();
    }
  };
  if (jobs == 0) jobs = 1;
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < jobs; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::size_t bad_instances = 0, total_mismatches = 0;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (mismatch_counts[i] == 0) continue;
    ++bad_instances;
    total_mismatches += mismatch_counts[i];
    if (bad_instances <= 20)
      std::cout << "MISMATCH C=" << instances[i].first
                << " D=" << instances[i].second << ": " << first_message[i]
                << "\n";
  }
  std::cout << "verify: " << instances.size() << " instances, "
            << bad_instances << " with mismatches, " << total_mismatches
            << " total mismatches\n";
  return bad_instances == 0 ? 0 : 1;
}

int run_bench(const std::string& target_text, std::size_t length,
              std::size_t trials, std::uint64_t seed) {
  const auto target = OrientationString::parse(target_text);
  const RootFactorization fac = primitive_root(target);
  std::mt19937_64 rng(seed);
  std::vector<Orient> symbols(length);
  for (auto& o : symbols) o = static_cast<Orient>(rng() % 3);
  const OrientationString text(std::move(symbols));

  std::cout << "root " << fac.root.str() << ", text length " << length << ", "
            << trials << " trials\n";
  std::cout << "trial\tmatched\ttime_us\tns_per_symbol\n";
  double best = 1e100;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const auto t0 = std::chrono::steady_clock::now();
    const StreamCount c = greedy_stream_count(fac.root, text);
    const auto t1 = std::chrono::steady_clock::now();
    const double us = std::chrono::duration<double, std::micro>(t1 - t0).count();
    best = std::min(best, us);
    std::cout << trial << "\t" << c.matched << "\t" << us << "\t"
              << us * 1000.0 / static_cast<double>(length) << "\n";
  }
  std::cout << "best_us " << best << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reconfigurability of homomorphisms between reflexive cycles"};
  app.require_subcommand(1);

  std::string instance_path, class_mode = "pushup";
  auto* decide_cmd =
      app.add_subcommand("decide", "decide one instance file (exit 0 "
                                   "connected, 1 not connected, 2 error)");
  decide_cmd->add_option("file", instance_path, "instance file")->required();
  decide_cmd->add_option("--class-mode", class_mode,
                         "block coordinate: pushup (default) or base");

  std::string target_text, source_text;
  bool debug = false;
  auto* chart_cmd =
      app.add_subcommand("characterize", "chart the components of every wind");
  chart_cmd->add_option("-D,--target", target_text, "target cycle")->required();
  chart_cmd->add_option("-C,--source", source_text, "source cycle")->required();
  chart_cmd->add_flag("--debug", debug, "include per-rotation stream counts");

  std::string root_text;
  auto* root_cmd = app.add_subcommand("root", "primitive root and multiplicity");
  root_cmd->add_option("string", root_text, "orientation string")->required();

  std::string pattern_text, match_text;
  auto* match_cmd =
      app.add_subcommand("match", "leftmost wildcard-subsequence embedding");
  match_cmd->add_option("-P,--pattern", pattern_text, "pattern")->required();
  match_cmd->add_option("-C,--text", match_text, "text")->required();

  std::string enum_target, enum_source;
  bool monotone_only = false;
  int wind_filter = 0;
  std::size_t cap = kDefaultEnumerationCap;
  auto* enum_cmd = app.add_subcommand("enumerate", "list homomorphisms");
  enum_cmd->add_option("-D,--target", enum_target, "target cycle")->required();
  enum_cmd->add_option("-C,--source", enum_source, "source cycle")->required();
  enum_cmd->add_flag("--monotone", monotone_only, "monotone maps only");
  auto* wind_opt = enum_cmd->add_option("--wind", wind_filter, "fixed wind");
  enum_cmd->add_option("--cap", cap, "enumeration cap");

  std::string oracle_target, oracle_source, dot_path;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "explicit Hom graph component summary");
  oracle_cmd->add_option("-D,--target", oracle_target, "target cycle")
      ->required();
  oracle_cmd->add_option("-C,--source", oracle_source, "source cycle")
      ->required();
  oracle_cmd->add_option("--dot", dot_path, "write DOT rendering here");
  oracle_cmd->add_option("--cap", cap, "enumeration cap");

  std::size_t max_m = 6, max_n = 5;
  unsigned jobs = std::thread::hardware_concurrency();
  auto* verify_cmd = app.add_subcommand(
      "verify", "sweep engine vs oracle over every small instance");
  verify_cmd->add_option("--max-m", max_m, "largest source length (default 6)");
  verify_cmd->add_option("--max-n", max_n, "largest target length (default 5)");
  verify_cmd->add_option("--jobs", jobs, "worker threads");
  verify_cmd->add_option("--class-mode", class_mode,
                         "block coordinate: pushup (default) or base");

  std::string bench_target = "+-+-";
  std::size_t bench_length = 1000000, bench_trials = 5;
  std::uint64_t bench_seed = 1;
  auto* bench_cmd =
      app.add_subcommand("bench", "time the streaming matcher on random text");
  bench_cmd->add_option("-D,--target", bench_target, "target cycle");
  bench_cmd->add_option("--length", bench_length, "text length");
  bench_cmd->add_option("--trials", bench_trials, "trials");
  bench_cmd->add_option("--seed", bench_seed, "random seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (decide_cmd->parsed()) return run_decide(instance_path, class_mode);
    if (chart_cmd->parsed())
      return run_characterize(target_text, source_text, debug);
    if (root_cmd->parsed()) return run_root(root_text);
    if (match_cmd->parsed()) return run_match(pattern_text, match_text);
    if (enum_cmd->parsed())
      return run_enumerate(enum_target, enum_source, monotone_only,
                           wind_opt->count() > 0, wind_filter, cap);
    if (oracle_cmd->parsed())
      return run_oracle(oracle_target, oracle_source, dot_path, cap);
    if (verify_cmd->parsed()) return run_verify(max_m, max_n, jobs, class_mode);
    if (bench_cmd->parsed())
      return run_bench(bench_target, bench_length, bench_trials, bench_seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
