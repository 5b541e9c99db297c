// rcsp: solve, benchmark and generate resource constrained shortest path instances.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "rcsp/bench.hpp"
#include "rcsp/bucket_graph.hpp"
#include "rcsp/generator.hpp"
#include "rcsp/instance_io.hpp"
#include "rcsp/solver.hpp"

namespace fs = std::filesystem;
using namespace rcsp;

namespace {

constexpr int kOk = 0, kInfeasible = 1, kUsage = 2, kInternal = 3;

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Expands '*' and '?' in the last path component; other arguments pass through.
std::vector<std::string> expand(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const auto& a : args) {
    fs::path p(a);
    auto name = p.filename().string();
    if (name.find_first_of("*?") == std::string::npos) {
      out.push_back(a);
      continue;
    }
    std::string re;
    for (char c : name) {
      if (c == '*') {
        re += ".*";
      } else if (c == '?') {
        re += '.';
      } else if (std::isalnum(static_cast<unsigned char>(c))) {
        re += c;
      } else {
        re += std::string("\\") + c;
      }
    }
    std::regex rx(re);
    auto dir = p.parent_path().empty() ? fs::path(".") : p.parent_path();
    std::vector<std::string> hits;
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.is_regular_file() && std::regex_match(entry.path().filename().string(), rx)) {
        hits.push_back((p.parent_path() / entry.path().filename()).string());
      }
    }
    std::sort(hits.begin(), hits.end());
    out.insert(out.end(), hits.begin(), hits.end());
  }
  return out;
}

struct Common {
  std::string config = "base";
  unsigned threads = 0;
  std::size_t lane_width = 32;
};

RunConfig make_config(const std::string& name, const Common& c) {
  auto cfg = RunConfig::preset(name);
  cfg.threads = c.threads;
  cfg.lane_width = c.lane_width;
  return cfg;
}

int run_solve(const std::string& file, const Common& c, const std::string& dump) {
  auto inst = load_instance(file);
  Solver solver(inst, make_config(c.config, c));
  auto res = solver.solve();
  nlohmann::json j;
  if (res.feasible) {
    j["cost"] = res.cost.to_double();
    j["path"] = res.path.vertices;
  } else {
    j["cost"] = nullptr;
    j["path"] = nlohmann::json::array();
  }
  j["labels_created"] = res.labels_created;
  j["buckets_processed"] = res.buckets_processed;
  j["runtime_s"] = res.runtime_s;
  std::cout << j.dump() << '\n';
  if (!dump.empty()) write_text(dump, solver.label_dump_csv());
  return res.feasible ? kOk : kInfeasible;
}

struct BenchArgs {
  std::vector<std::string> instances;
  std::string configs = "base,parallel,bidir,simd,all";
  std::string out, profile_out;
  double shift = 10;
  double hard_threshold = 10;
  int repeats = 1;
  bool omit_timing = false;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void print_aggregates(const std::vector<bench::ReportRow>& rows, double shift, double hard,
                      const std::vector<std::string>& configs, std::ostream& os) {
  bench::AggregateOptions opt;
  opt.shift = shift;
  os << "shifted geometric mean (shift " << shift << " s), all instances\n";
  os << bench::format_table(bench::aggregate(rows, opt), configs);
  opt.hard_threshold = hard;
  auto hard_groups = bench::aggregate(rows, opt);
  os << "instances with base runtime >= " << hard << " s\n";
  if (hard_groups.empty()) {
    os << "  (none)\n";
  } else {
    os << bench::format_table(hard_groups, configs);
  }
}

int run_bench(const BenchArgs& a, const Common& c) {
  auto files = expand(a.instances);
  if (files.empty()) throw CLI::ValidationError("bench", "no instances matched");
  auto configs = split_list(a.configs);
  std::vector<bench::ReportRow> rows;
  for (const auto& f : files) {
    auto inst = load_instance(f);
    for (const auto& name : configs) {
      auto cfg = make_config(name, c);
      Solver solver(inst, cfg);
      SolveResult best;
      for (int r = 0; r < std::max(1, a.repeats); ++r) {
        auto res = solver.solve();
        if (r == 0 || res.runtime_s < best.runtime_s) best = res;
      }
      bench::ReportRow row;
      row.instance = f;
      row.config = name;
      row.threads = cfg.workers();
      row.runtime_s = a.omit_timing ? 0.0 : best.runtime_s;
      row.cost = best.feasible ? best.cost.to_string() : "infeasible";
      row.labels = best.labels_created;
      rows.push_back(row);
    }
  }
  auto csv = bench::write_report_csv(rows);
  if (a.out.empty()) {
    std::cout << csv;
  } else {
    write_text(a.out, csv);
    print_aggregates(rows, a.shift, a.hard_threshold, configs, std::cout);
  }
  if (!a.profile_out.empty()) write_text(a.profile_out, bench::write_profile_csv(bench::perf_profile(rows)));
  auto bad = bench::cost_disagreements(rows);
  if (!bad.empty()) {
    for (const auto& i : bad) std::cerr << "configs disagree on the optimum of " << i << '\n';
    return kInternal;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resource constrained shortest path solver and benchmark"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", common.config, "base|parallel|bidir|simd|all")
        ->check(CLI::IsMember({"base", "parallel", "bidir", "simd", "all"}));
    sub->add_option("--threads", common.threads, "worker threads for parallel configs (default: cores, max 16)");
    sub->add_option("--lane-width", common.lane_width, "labels per batched dominance chunk")->check(CLI::Range(1, 64));
  };

  auto* solve_cmd = app.add_subcommand("solve", "solve one instance and print the result as JSON");
  std::string solve_file, dump_labels;
  solve_cmd->add_option("instance", solve_file, "instance file")->required();
  solve_cmd->add_option("--dump-labels", dump_labels, "write every stored label as CSV");
  add_common(solve_cmd);

  auto* bench_cmd = app.add_subcommand("bench", "run instances under several configs and report runtimes");
  BenchArgs bench_args;
  bench_cmd->add_option("instances", bench_args.instances, "instance files or globs")->required();
  bench_cmd->add_option("--configs", bench_args.configs, "comma separated config names");
  bench_cmd->add_option("--out", bench_args.out, "report CSV (default stdout)");
  bench_cmd->add_option("--profile-out", bench_args.profile_out, "performance profile CSV");
  bench_cmd->add_option("--shift", bench_args.shift, "geometric mean shift in seconds")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--hard-threshold", bench_args.hard_threshold, "base runtime of hard instances (s)");
  bench_cmd->add_option("--repeats", bench_args.repeats, "runs per cell, minimum is reported")->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--omit-timing", bench_args.omit_timing, "write 0 runtimes for byte-stable output");
  add_common(bench_cmd);

  auto* gen_cmd = app.add_subcommand("gen", "write a random instance");
  GeneratorOptions gen;
  std::string gen_out;
  gen_cmd->add_option("--vertices", gen.vertex_count)->check(CLI::Range(2, 100000));
  gen_cmd->add_option("--density", gen.density)->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--resources", gen.resource_count)->check(CLI::Range(1, 16));
  gen_cmd->add_option("--ng-size", gen.ng_size)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--max-q", gen.max_q)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--window-slack", gen.window_slack)->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--capacity", gen.capacity)->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--out", gen_out, "output file (default stdout)");

  auto* deps_cmd = app.add_subcommand("dump-deps", "write the bucket dependency graph as DOT");
  std::string deps_file, deps_out, deps_mode = "mono";
  bool deps_raw = false;
  deps_cmd->add_option("instance", deps_file)->required();
  deps_cmd->add_option("--mode", deps_mode)->check(CLI::IsMember({"mono", "bidir"}));
  deps_cmd->add_flag("--raw", deps_raw, "keep implied edges");
  deps_cmd->add_option("--out", deps_out);

  auto* agg_cmd = app.add_subcommand("aggregate", "summarize an existing report CSV");
  std::string agg_file, agg_profile;
  double agg_shift = 10, agg_hard = 10;
  agg_cmd->add_option("report", agg_file)->required();
  agg_cmd->add_option("--shift", agg_shift)->check(CLI::PositiveNumber);
  agg_cmd->add_option("--hard-threshold", agg_hard);
  agg_cmd->add_option("--profile-out", agg_profile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve_cmd) return run_solve(solve_file, common, dump_labels);
    if (*bench_cmd) return run_bench(bench_args, common);
    if (*gen_cmd) {
      write_text(gen_out, serialize_instance(generate_random(gen)));
      return kOk;
    }
    if (*deps_cmd) {
      auto inst = load_instance(deps_file);
      auto layout = std::make_shared<BucketLayout>(build_buckets(inst));
      auto g = build_dependencies(inst, layout, deps_mode == "bidir" ? SearchMode::bidir : SearchMode::mono);
      if (!deps_raw) reduce_implied_edges(g);
      write_text(deps_out, to_dot(g));
      return kOk;
    }
    if (*agg_cmd) {
      auto rows = bench::read_report_csv(read_text(agg_file));
      std::vector<std::string> configs;
      for (const auto& r : rows) {
        if (std::find(configs.begin(), configs.end(), r.config) == configs.end()) configs.push_back(r.config);
      }
      // Known presets first, in their usual order.
      const auto known = preset_names();
      auto rank = [&](const std::string& c) {
        return std::find(known.begin(), known.end(), c) - known.begin();
      };
      std::stable_sort(configs.begin(), configs.end(),
                       [&](const std::string& a, const std::string& b) { return rank(a) < rank(b); });
      print_aggregates(rows, agg_shift, agg_hard, configs, std::cout);
      if (!agg_profile.empty()) write_text(agg_profile, bench::write_profile_csv(bench::perf_profile(rows)));
      return kOk;
    }
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
