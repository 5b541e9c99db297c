// End-to-end acceptance checks. One PASS/FAIL line per criterion; exit code is
// the number of failures.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>

#include "rcsp/bench.hpp"
#include "rcsp/generator.hpp"
#include "rcsp/label_store.hpp"
#include "rcsp/oracle.hpp"
#include "rcsp/solver.hpp"
#include "support.hpp"

using namespace rcsp;

namespace {

// Pinned tolerances and sizes.
constexpr int kOracleInstances = 500;
constexpr double kOracleBudgetSeconds = 60;
constexpr int kParetoInstances = 100;
constexpr int kKernelPairs = 100'000;
constexpr int kReductionDags = 200;
constexpr int kSpliceInstances = 100;
constexpr int kDeterminismRepeats = 20;
constexpr double kStatsRelTol = 0.01;
constexpr std::size_t kPerfMinLabels = 100'000;
constexpr double kPerfAllRatio = 0.5;
constexpr double kPerfSimdRatio = 0.9;
constexpr unsigned kPerfThreads = 8;
constexpr int kPerfRuns = 3;
constexpr int kStressRuns = 1000;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Verdict {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

// Small instances for the oracle-based checks, drawn from a fixed seed
// sequence; ones too large to enumerate are passed over.
struct SmallCase {
  std::uint64_t seed;
  Instance inst;
  std::vector<oracle::EnumeratedPath> paths;  // every feasible partial path
};

GeneratorOptions small_options(std::uint64_t seed) {
  GeneratorOptions o;
  o.vertex_count = 3 + seed % 10;  // 3..12
  o.density = 0.2 + 0.1 * static_cast<double>(seed % 5);
  o.resource_count = 2 + seed % 2;  // primary + optional additive + ng
  o.ng_size = 1 + seed % 4;
  o.seed = seed;
  o.max_q = 1 + static_cast<Accum>(seed % 10);
  o.window_slack = 5 + static_cast<Accum>(seed % 40);
  o.capacity = 5 + static_cast<Accum>(seed % 20);
  return o;
}

std::vector<SmallCase> small_cases(int count) {
  std::vector<SmallCase> out;
  for (std::uint64_t seed = 1; static_cast<int>(out.size()) < count; ++seed) {
    auto inst = generate_random(small_options(seed));
    try {
      auto paths = oracle::enumerate_feasible_paths(inst, 200'000);
      out.push_back({seed, std::move(inst), std::move(paths)});
    } catch (const oracle::LimitExceeded&) {
    }
  }
  return out;
}

std::optional<Cost> best_complete(const SmallCase& c) {
  std::optional<Cost> best;
  for (const auto& p : c.paths) {
    if (p.end() == c.inst.sink() && (!best || p.cost < *best)) best = p.cost;
  }
  return best;
}

// (cost, interval values, ng words): the dominance-relevant part of a label.
using LabelKey = std::tuple<std::int64_t, std::vector<Accum>, std::vector<std::uint64_t>>;

LabelKey key_of(const Instance& inst, const oracle::ResourceState& s, Cost cost) {
  LabelKey k{cost.ticks(), {}, {}};
  for (auto r : inst.interval_resources()) std::get<1>(k).push_back(s.values[r]);
  for (auto r : inst.bitset_resources()) {
    auto w = s.ng[r].words();
    std::get<2>(k).insert(std::get<2>(k).end(), w.begin(), w.end());
  }
  return k;
}

std::string describe(const SmallCase& c, const std::string& config) {
  return "seed " + std::to_string(c.seed) + " config " + config;
}

// Timing covers the enumeration as well as the five solves per instance.
Verdict oracle_equivalence(std::vector<SmallCase>& cases, int* feasible_count) {
  Verdict v;
  const auto t0 = Clock::now();
  cases = small_cases(kOracleInstances);
  int feasible = 0;
  for (const auto& c : cases) {
    auto exact = best_complete(c);
    feasible += exact.has_value();
    for (const auto& name : preset_names()) {
      auto cfg = RunConfig::preset(name);
      if (cfg.parallel) cfg.threads = 4;
      auto res = solve(c.inst, cfg);
      if (res.feasible != exact.has_value() || (exact && res.cost != *exact)) {
        v.fail(describe(c, name) + ": got " + (res.feasible ? res.cost.to_string() : "infeasible") + ", expected " +
               (exact ? exact->to_string() : "infeasible"));
      }
    }
  }
  const double t = seconds_since(t0);
  if (t >= kOracleBudgetSeconds) v.fail("took " + std::to_string(t) + " s");
  *feasible_count = feasible;
  if (v.pass) {
    std::ostringstream os;
    os << cases.size() << " instances (" << feasible << " feasible, seeds 1.." << cases.back().seed
       << ") x 5 presets, " << t << " s";
    v.detail = os.str();
  }
  return v;
}

Verdict pareto_completeness(const std::vector<SmallCase>& cases) {
  Verdict v;
  if (cases.size() < kParetoInstances) {
    v.fail("too few enumerable instances");
    return v;
  }
  std::size_t labels = 0;
  for (int i = 0; i < kParetoInstances; ++i) {
    const auto& c = cases[static_cast<std::size_t>(i)];
    std::vector<oracle::EnumeratedPath> at_sink;
    for (const auto& p : c.paths) {
      if (p.end() == c.inst.sink()) at_sink.push_back(p);
    }
    std::set<LabelKey> expected;
    for (const auto& p : oracle::pareto_filter(c.inst, at_sink)) expected.insert(key_of(c.inst, p.state, p.cost));
    for (const char* name : {"base", "parallel", "simd"}) {
      auto cfg = RunConfig::preset(name);
      if (cfg.parallel) cfg.threads = 4;
      Solver solver(c.inst, cfg);
      solver.solve();
      std::multiset<LabelKey> got;
      for (const auto& l : solver.vertex_labels(Direction::forward, c.inst.sink())) {
        got.insert({l.cost.ticks(), l.values, l.ng});
      }
      if (got != std::multiset<LabelKey>(expected.begin(), expected.end())) {
        v.fail(describe(c, name) + ": " + std::to_string(got.size()) + " sink labels, oracle Pareto set has " +
               std::to_string(expected.size()));
      }
      labels += got.size();
    }
  }
  if (v.pass) v.detail = std::to_string(kParetoInstances) + " instances x 3 mono presets, " + std::to_string(labels) +
                         " sink labels matched";
  return v;
}

template <class T>
bool kernel_pair(std::mt19937_64& rng, const std::vector<std::size_t>& widths) {
  const std::size_t k = 1 + rng() % 4, w = 1 + rng() % 2;
  const int range = 1 + static_cast<int>(rng() % 16);
  const std::size_t n = rng() % 100;
  std::uniform_int_distribution<int> val(0, range);
  auto fill = [&](LabelColumns<T>& c) {
    std::vector<T> keys(k);
    std::vector<std::uint64_t> ng(w);
    for (auto& x : keys) x = static_cast<T>(val(rng));
    // Sparse memories so subset tests succeed often enough to matter.
    for (auto& x : ng) x = rng() & rng() & rng();
    c.push_back(val(rng) - range / 2, keys.data(), ng.data(), {}, kNoEdge);
  };
  LabelColumns<T> store(k, w), probe(k, w);
  for (std::size_t i = 0; i < n; ++i) fill(store);
  fill(probe);
  std::vector<T> scratch(k);
  auto cand = label_ref(probe, 0, scratch.data());
  const std::size_t begin = n ? rng() % (n + 1) : 0;
  const bool expect = dominated_by_any_scalar(store, begin, n, cand);
  for (auto lane : widths) {
    if (dominated_by_any_batched(store, begin, n, cand, lane) != expect) return false;
  }
  return true;
}

Verdict kernel_equivalence() {
  Verdict v;
  std::mt19937_64 rng(2024);
  const std::vector<std::size_t> widths{1, 8, 16, 32};
  for (int i = 0; i < kKernelPairs; ++i) {
    bool ok = (i % 2 == 0) ? kernel_pair<std::uint16_t>(rng, widths) : kernel_pair<std::uint32_t>(rng, widths);
    if (!ok) {
      v.fail("mismatch at pair " + std::to_string(i));
      break;
    }
  }
  if (v.pass) v.detail = std::to_string(kKernelPairs) + " pairs, W in {1, 8, 16, 32}, 16- and 32-bit keys";
  return v;
}

Verdict reduction_correctness() {
  Verdict v;
  std::mt19937_64 rng(99);
  std::size_t removed = 0;
  for (int i = 0; i < kReductionDags; ++i) {
    const std::size_t n = 1 + rng() % 200;
    const double p = std::uniform_real_distribution<double>(0.0, 8.0 / static_cast<double>(n))(rng);
    auto dag = testing::random_dag(rng, n, std::min(1.0, p));
    auto red = reduce_implied_edges(dag);
    if (testing::closure(red) != testing::closure(dag)) v.fail("reachability changed on DAG " + std::to_string(i));
    for (std::size_t u = 0; u < n; ++u) removed += dag[u].size() - red[u].size();
  }

  // Two vertices x, y; x in [1, 11], y in [0, 21]; x->y uses 6, y->x uses 4.
  auto inst = parse_instance(
      "RCSP 1\nRESOURCES 1 PRIMARY 0\nRESOURCE 0 interval-timewindow\n"
      "VERTEX 0 BOUNDS 0 1 11\nVERTEX 1 BOUNDS 0 0 21\n"
      "EDGE 0 1 COST 1 Q 0 6\nEDGE 1 0 COST 1 Q 0 4\nSOURCE 1\nSINK 0\n");
  auto layout = std::make_shared<BucketLayout>(build_buckets(inst));
  auto g = build_dependencies(inst, layout, SearchMode::mono);
  reduce_implied_edges(g);
  auto name = [&](JobId j) {
    return std::string(layout->vertex(j) == 0 ? "x" : "y") + std::to_string(layout->level(j) + 1);
  };
  const std::map<std::string, std::vector<std::string>> expected{
      {"y1", {"x1"}}, {"x1", {"x2"}}, {"x2", {"y2"}}, {"y2", {"x3"}},
      {"x3", {"y3"}}, {"y3", {"y4"}}, {"y4", {}},
  };
  for (JobId j = 0; j < g.job_count; ++j) {
    std::vector<std::string> got;
    for (auto s : g.successors[j]) got.push_back(name(s));
    if (got != expected.at(name(j))) v.fail("two-vertex fixture: wrong minimal list for " + name(j));
  }
  if (v.pass) {
    v.detail = std::to_string(kReductionDags) + " DAGs (" + std::to_string(removed) +
               " implied edges removed), two-vertex fixture chain y1-x1-x2-y2-x3-y3-y4";
  }
  return v;
}

Verdict splice_exactly_once(const std::vector<SmallCase>& cases) {
  Verdict v;
  std::size_t emitted = 0, checked = 0;
  for (const auto& c : cases) {
    if (checked == kSpliceInstances) break;
    std::vector<oracle::EnumeratedPath> complete;
    for (const auto& p : c.paths) {
      if (p.end() == c.inst.sink()) complete.push_back(p);
    }
    if (complete.empty()) continue;
    ++checked;
    auto optimal = oracle::pareto_filter(c.inst, complete);
    for (const char* name : {"bidir", "all"}) {
      for (bool prune : {false, true}) {
        auto cfg = RunConfig::preset(name);
        if (cfg.parallel) cfg.threads = 4;
        cfg.record_emissions = true;
        cfg.prune = prune;
        Solver solver(c.inst, cfg);
        auto res = solver.solve();
        std::map<std::vector<EdgeId>, int> count;
        for (const auto& em : solver.emissions()) ++count[solver.reconstruct(em).edges];
        emitted += solver.emissions().size();
        const std::string where = describe(c, name) + (prune ? " (pruned)" : " (unpruned)");
        for (const auto& [edges, n] : count) {
          if (n > 1) v.fail(where + ": a path was emitted " + std::to_string(n) + " times");
        }
        if (!prune) {
          // Without dominance nothing is discarded, so every feasible s-t path,
          // in particular every Pareto-optimal one, must appear.
          if (count.size() != complete.size()) {
            v.fail(where + ": " + std::to_string(count.size()) + " distinct emissions for " +
                   std::to_string(complete.size()) + " feasible paths");
          }
          for (const auto& p : optimal) {
            if (!count.count(p.edges)) v.fail(where + ": a Pareto-optimal path was never emitted");
          }
        }
        auto exact = best_complete(c);
        if (!res.feasible || res.cost != *exact) v.fail(where + ": optimum mismatch");
      }
    }
  }
  if (checked < kSpliceInstances) v.fail("only " + std::to_string(checked) + " feasible instances");
  if (v.pass) {
    v.detail = std::to_string(checked) + " instances, bidir and all, with and without pruning, " +
               std::to_string(emitted) + " emissions, max multiplicity 1";
  }
  return v;
}

using LabelSnapshot = std::vector<std::tuple<std::int64_t, std::vector<Accum>, std::vector<std::uint64_t>, BucketId,
                                             std::uint32_t, EdgeId>>;

std::vector<LabelSnapshot> snapshot(const Solver& solver) {
  std::vector<LabelSnapshot> out;
  for (BucketId b = 0; b < solver.layout().bucket_count(); ++b) {
    LabelSnapshot s;
    for (const auto& l : solver.labels(Direction::forward, b)) {
      s.emplace_back(l.cost.ticks(), l.values, l.ng, l.parent.bucket, l.parent.index, l.via);
    }
    out.push_back(std::move(s));
  }
  return out;
}

Verdict scheduler_determinism() {
  Verdict v;
  GeneratorOptions o;
  o.vertex_count = 40;
  o.density = 0.3;
  o.resource_count = 3;
  o.ng_size = 6;
  o.window_slack = 60;
  o.capacity = 50;
  o.seed = 17;
  auto inst = generate_random(o);
  std::optional<std::vector<LabelSnapshot>> reference;
  std::size_t labels = 0;
  for (const char* name : {"parallel", "simd"}) {
    reference.reset();
    for (unsigned threads : {1u, 2u, 4u, 8u}) {
      for (int r = 0; r < kDeterminismRepeats; ++r) {
        auto cfg = RunConfig::preset(name);
        cfg.parallel = true;
        cfg.threads = threads;
        Solver solver(inst, cfg);
        auto res = solver.solve();
        labels = res.labels_created;
        auto snap = snapshot(solver);
        if (!reference) {
          reference = std::move(snap);
        } else if (snap != *reference) {
          v.fail(std::string(name) + ": label sets differ at " + std::to_string(threads) + " threads, run " +
                 std::to_string(r));
        }
      }
    }
  }
  if (v.pass) {
    v.detail = "mono search, " + std::to_string(labels) + " labels, threads {1, 2, 4, 8} x " +
               std::to_string(kDeterminismRepeats) + " runs, scalar and batched dominance";
  }
  return v;
}

bool close_to(double got, double want) { return std::abs(got - want) <= kStatsRelTol * std::abs(want); }

Verdict statistics_reproduction() {
  Verdict v;
  std::ifstream in(RCSP_TEST_DATA "/runtimes_by_instance.csv");
  if (!in) {
    v.fail("missing runtimes_by_instance.csv");
    return v;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  auto rows = bench::read_report_csv(ss.str());
  const std::vector<std::string> configs{"base", "parallel", "bidir", "simd", "all"};
  // Shifted (10 s) geometric means per neighbourhood size, then speedups
  // over base, for all instances and for those with base >= 10 s.
  const std::map<std::string, std::vector<double>> all_runtime{
      {"N8", {2.298, 0.798, 1.144, 1.373, 0.334}},
      {"N16", {6.804, 3.753, 3.945, 5.022, 1.367}},
      {"N24", {13.031, 7.729, 7.731, 9.730, 3.297}}};
  const std::map<std::string, std::vector<double>> all_speedup{
      {"N8", {1.000, 2.881, 2.010, 1.674, 6.876}},
      {"N16", {1.000, 1.813, 1.725, 1.355, 4.978}},
      {"N24", {1.000, 1.686, 1.686, 1.339, 3.952}}};
  const std::map<std::string, std::vector<double>> hard_runtime{
      {"N8", {34.170, 7.638, 12.027, 15.936, 2.726}},
      {"N16", {162.149, 51.963, 55.422, 88.385, 11.071}},
      {"N24", {373.513, 122.534, 122.487, 196.805, 26.841}}};
  const std::map<std::string, std::vector<double>> hard_speedup{
      {"N8", {1.000, 4.474, 2.841, 2.144, 12.534}},
      {"N16", {1.000, 3.120, 2.926, 1.835, 14.646}},
      {"N24", {1.000, 3.048, 3.049, 1.898, 13.916}}};
  double worst = 0;
  auto compare = [&](const std::vector<bench::GroupStats>& groups, const auto& runtime, const auto& speedup,
                     const std::string& label) {
    if (groups.size() != runtime.size()) v.fail(label + ": wrong group count");
    for (const auto& g : groups) {
      for (std::size_t c = 0; c < configs.size(); ++c) {
        const double rt = g.runtime.at(configs[c]), sp = g.speedup.at(configs[c]);
        const double want_rt = runtime.at(g.group)[c], want_sp = speedup.at(g.group)[c];
        worst = std::max({worst, std::abs(rt / want_rt - 1), std::abs(sp / want_sp - 1)});
        if (!close_to(rt, want_rt) || !close_to(sp, want_sp)) {
          v.fail(label + " " + g.group + " " + configs[c] + ": runtime " + std::to_string(rt) + " speedup " +
                 std::to_string(sp));
        }
      }
      const double norm_base = g.normalized.at("base");
      if (!close_to(norm_base, speedup.at(g.group).back())) v.fail(label + " " + g.group + ": normalized base");
    }
  };
  bench::AggregateOptions opt;
  opt.shift = 10;
  compare(bench::aggregate(rows, opt), all_runtime, all_speedup, "all instances");
  opt.hard_threshold = 10;
  compare(bench::aggregate(rows, opt), hard_runtime, hard_speedup, "hard instances");
  if (v.pass) {
    std::ostringstream os;
    os << rows.size() << " runtime cells, 60 table entries, worst relative error " << worst;
    v.detail = os.str();
  }
  return v;
}

Verdict performance_property() {
  Verdict v;
  GeneratorOptions o;
  o.vertex_count = 70;
  o.density = 0.3;
  o.resource_count = 4;
  o.ng_size = 8;
  o.window_slack = 80;
  o.capacity = 60;
  o.seed = 3;
  auto inst = generate_random(o);
  auto best_of = [&](const char* name, unsigned threads, std::size_t* labels, Cost* cost) {
    auto cfg = RunConfig::preset(name);
    cfg.threads = threads;
    Solver solver(inst, cfg);
    double best = 1e300;
    for (int r = 0; r < kPerfRuns; ++r) {
      auto res = solver.solve();
      best = std::min(best, res.runtime_s);
      *labels = res.labels_created;
      *cost = res.cost;
    }
    return best;
  };
  std::size_t base_labels = 0, l = 0;
  Cost base_cost, c;
  const double base = best_of("base", 1, &base_labels, &base_cost);
  const double simd = best_of("simd", 1, &l, &c);
  if (c != base_cost) v.fail("simd optimum differs");
  const double all = best_of("all", kPerfThreads, &l, &c);
  if (c != base_cost) v.fail("all optimum differs");
  if (base_labels < kPerfMinLabels) v.fail("base created only " + std::to_string(base_labels) + " labels");
  std::ostringstream os;
  os << "base " << base << " s (" << base_labels << " labels), simd " << simd << " s (" << simd / base
     << "x), all@" << kPerfThreads << " " << all << " s (" << all / base << "x), "
     << std::thread::hardware_concurrency() << " hardware threads";
  if (all > kPerfAllRatio * base) v.fail("all too slow: " + os.str());
  if (simd > kPerfSimdRatio * base) v.fail("simd too slow: " + os.str());
  if (v.pass) v.detail = os.str();
  return v;
}

// Random job graphs, random body durations; checks each start against the
// release rules independently of the tracker.
Verdict lifecycle_stress() {
  Verdict v;
  std::mt19937_64 rng(5);
  std::size_t jobs = 0, violations = 0, doubles = 0, deadlocks = 0;
  // Real bidirectional graphs exercise the alternative groups.
  std::vector<JobGraph> real;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto inst = generate_random(small_options(seed));
    auto layout = std::make_shared<BucketLayout>(build_buckets(inst));
    auto g = build_dependencies(inst, layout, seed % 2 ? SearchMode::bidir : SearchMode::mono);
    if (seed % 3) reduce_implied_edges(g);
    real.push_back(std::move(g));
  }
  for (int run = 0; run < kStressRuns; ++run) {
    JobGraph synthetic;
    const JobGraph* g = nullptr;
    if (run % 2 == 0) {
      synthetic = testing::graph_from(testing::random_dag(rng, 1 + rng() % 120, 0.05));
      g = &synthetic;
    } else {
      g = &real[static_cast<std::size_t>(run / 2) % real.size()];
    }
    const auto n = g->job_count;
    std::vector<std::vector<JobId>> hard_preds(n);
    for (JobId u = 0; u < n; ++u) {
      for (auto w : g->successors[u]) hard_preds[w].push_back(u);
    }
    std::vector<std::vector<const JobGraph::Group*>> groups(n);
    for (const auto& grp : g->groups) groups[grp.owner].push_back(&grp);
    std::unique_ptr<std::atomic<int>[]> starts(new std::atomic<int>[n]);
    std::unique_ptr<std::atomic<bool>[]> done(new std::atomic<bool>[n]);
    for (std::size_t j = 0; j < n; ++j) {
      starts[j] = 0;
      done[j] = false;
    }
    std::atomic<std::size_t> bad{0}, twice{0};
    std::vector<unsigned> spin(n);
    for (auto& s : spin) s = static_cast<unsigned>(rng() % 40);
    DependencyTracker tracker(*g);
    auto stats = execute(
        tracker,
        [&](JobId j, unsigned) {
          if (starts[j].fetch_add(1) != 0) ++twice;
          for (auto p : hard_preds[j]) {
            if (!done[p].load()) ++bad;
          }
          for (const auto* grp : groups[j]) {
            bool any = std::any_of(grp->members.begin(), grp->members.end(), [&](JobId m) { return done[m].load(); });
            if (!any) ++bad;
          }
          const auto until = Clock::now() + std::chrono::microseconds(spin[j]);
          while (Clock::now() < until) {
          }
          done[j] = true;
          return Outcome::processed;
        },
        run % 4 == 1 ? QueuePolicy::midpoint_balance : QueuePolicy::fifo, 1 + static_cast<unsigned>(rng() % 8));
    jobs += n;
    violations += bad;
    doubles += twice;
    if (stats.deadlock || stats.jobs_run != n) ++deadlocks;
    for (std::size_t j = 0; j < n; ++j) {
      if (starts[j] != 1) ++doubles;
    }
  }
  if (violations) v.fail(std::to_string(violations) + " happens-before violations");
  if (doubles) v.fail(std::to_string(doubles) + " jobs not run exactly once");
  if (deadlocks) v.fail(std::to_string(deadlocks) + " deadlocked runs");
  if (v.pass) v.detail = std::to_string(kStressRuns) + " runs, " + std::to_string(jobs) + " jobs, zero reports";
  return v;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const char* title, const std::function<Verdict()>& check) {
    const auto t0 = Clock::now();
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    failures += !v.pass;
    std::printf("%s criterion %d (%s): %s [%.1f s]\n", v.pass ? "PASS" : "FAIL", id, title, v.detail.c_str(),
                seconds_since(t0));
    std::fflush(stdout);
  };

  std::vector<SmallCase> cases;
  int feasible = 0;
  report(1, "oracle equivalence", [&] { return oracle_equivalence(cases, &feasible); });
  report(2, "pareto completeness", [&] { return pareto_completeness(cases); });
  report(3, "dominance kernel equivalence", kernel_equivalence);
  report(4, "transitive reduction", reduction_correctness);
  report(5, "exactly-once splice emission", [&] { return splice_exactly_once(cases); });
  report(6, "scheduler determinism", scheduler_determinism);
  report(7, "statistics reproduction", statistics_reproduction);
  report(8, "desk-scale performance", performance_property);
  report(9, "lifecycle safety under stress", lifecycle_stress);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures;
}
