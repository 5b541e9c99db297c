#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "rcsp/bucket_graph.hpp"
#include "rcsp/instance_io.hpp"
#include "support.hpp"

using namespace rcsp;

namespace {

// Two vertices x (0) and y (1) with edges both ways, time windows
// x in [1, 11] and y in [0, 21], x->y consuming 6 and y->x consuming 4.
const char* kTwoVertex = R"(RCSP 1
RESOURCES 1 PRIMARY 0
RESOURCE 0 interval-timewindow
VERTEX 0 BOUNDS 0 1 11
VERTEX 1 BOUNDS 0 0 21
EDGE 0 1 COST 1 Q 0 6
EDGE 1 0 COST 1 Q 0 4
SOURCE 1
SINK 0
)";

using testing::closure;
using testing::random_dag;
using testing::Succ;

struct Named {
  const JobGraph& g;
  const BucketLayout& layout;
  // "x1" is the first level of x.
  JobId job(const std::string& name) const {
    VertexId v = name[0] == 'x' ? 0 : 1;
    return g.job(JobKind::forward, layout.id(v, static_cast<std::uint32_t>(std::stoi(name.substr(1)) - 1)));
  }
  std::set<JobId> jobs(std::initializer_list<const char*> names) const {
    std::set<JobId> out;
    for (auto n : names) out.insert(job(n));
    return out;
  }
  std::set<JobId> succ(const std::string& name) const {
    const auto& s = g.successors[job(name)];
    return {s.begin(), s.end()};
  }
};

}  // namespace

TEST_CASE("bucket sizes and intervals") {
  auto inst = parse_instance(kTwoVertex);
  auto layout = build_buckets(inst);
  CHECK(bucket_size(inst, 0) == 4);
  CHECK(bucket_size(inst, 1) == 6);
  CHECK(layout.levels(0) == 3);
  CHECK(layout.levels(1) == 4);
  CHECK(layout.bucket_count() == 7);
  CHECK(layout.interval(0, 0) == Interval{1, 5});
  CHECK(layout.interval(0, 2) == Interval{9, 12});
  CHECK(layout.interval(1, 3) == Interval{18, 22});
  CHECK(layout.level_of(0, 11) == 2);
  CHECK(layout.level_of(1, 6) == 1);
  BucketId b = layout.id(1, 2);
  CHECK(layout.vertex(b) == 1);
  CHECK(layout.level(b) == 2);
}

TEST_CASE("forward pull sources clamp at the window start") {
  auto inst = parse_instance(kTwoVertex);
  auto layout = build_buckets(inst);
  // x1 = [1, 5) receives y values up to 0, plus everything that waits for a_x.
  auto p = plan_pull_sources(inst, layout, Direction::forward, 0, 0);
  REQUIRE(p.size() == 1);
  CHECK(p[0] == PullSource{1, 1, 0, 0});
  // y4 = [18, 22) would need x values >= 12.
  CHECK(plan_pull_sources(inst, layout, Direction::forward, 1, 3).empty());
  // y3 = [12, 18) pulls x values 6..11.
  p = plan_pull_sources(inst, layout, Direction::forward, 1, 2);
  REQUIRE(p.size() == 1);
  CHECK(p[0] == PullSource{0, 0, 1, 2});
}

TEST_CASE("backward pull sources clamp at the window end") {
  auto inst = parse_instance(kTwoVertex);
  auto layout = build_buckets(inst);
  // x3 = [9, 12) backward over x->y: y values 15..21, the top clamps to b_y.
  auto p = plan_pull_sources(inst, layout, Direction::backward, 0, 2);
  REQUIRE(p.size() == 1);
  CHECK(p[0] == PullSource{0, 1, 2, 3});
  // y1 = [0, 6) backward over y->x: x values 4..9.
  p = plan_pull_sources(inst, layout, Direction::backward, 1, 0);
  REQUIRE(p.size() == 1);
  CHECK(p[0] == PullSource{1, 0, 0, 2});
}

TEST_CASE("two-vertex dependency lists before and after reduction") {
  auto inst = parse_instance(kTwoVertex);
  auto layout = std::make_shared<BucketLayout>(build_buckets(inst));
  auto g = build_dependencies(inst, layout, SearchMode::mono);
  Named n{g, *layout};
  CHECK(g.job_count == 7);
  CHECK(g.seeds == std::vector<JobId>{n.job("y1")});
  CHECK(n.succ("y1") == n.jobs({"x1", "x2", "x3", "y2"}));
  CHECK(n.succ("x1") == n.jobs({"y2", "x2"}));
  CHECK(n.succ("x2") == n.jobs({"y2", "y3", "x3"}));
  CHECK(n.succ("y2") == n.jobs({"x3", "y3"}));
  CHECK(n.succ("x3") == n.jobs({"y3"}));
  CHECK(n.succ("y3") == n.jobs({"y4"}));
  CHECK(n.succ("y4").empty());
  CHECK(g.hard_edge_count() == 13);

  reduce_implied_edges(g);
  CHECK(n.succ("y1") == n.jobs({"x1"}));
  CHECK(n.succ("x1") == n.jobs({"x2"}));
  CHECK(n.succ("x2") == n.jobs({"y2"}));
  CHECK(n.succ("y2") == n.jobs({"x3"}));
  CHECK(n.succ("x3") == n.jobs({"y3"}));
  CHECK(n.succ("y3") == n.jobs({"y4"}));
  CHECK(g.hard_edge_count() == 6);
}

TEST_CASE("bidirectional graph has splice groups") {
  auto inst = parse_instance(kTwoVertex);
  auto layout = std::make_shared<BucketLayout>(build_buckets(inst));
  auto g = build_dependencies(inst, layout, SearchMode::bidir);
  CHECK(g.job_count == 21);
  CHECK(g.seeds.size() == 2);
  CHECK(g.kind(g.job(JobKind::splice, 3)) == JobKind::splice);
  CHECK(g.bucket(g.job(JobKind::splice, 3)) == 3);
  auto counts = g.dependency_counts();
  for (auto s : g.seeds) CHECK(counts[s] == 0);
  // Besides the seeds only the top of y starts free: nothing lies above it
  // and no backward label can reach it.
  std::vector<JobId> free;
  for (JobId j = 0; j < g.job_count; ++j) {
    if (counts[j] == 0) free.push_back(j);
  }
  CHECK(free.size() == 3);
  CHECK(std::count(free.begin(), free.end(), g.job(JobKind::backward, layout->id(1, 3))) == 1);
  CHECK_FALSE(g.groups.empty());
  for (const auto& grp : g.groups) {
    CHECK(g.kind(grp.owner) == JobKind::splice);
    CHECK_FALSE(grp.members.empty());
  }
  CHECK(to_dot(g).find("digraph") != std::string::npos);
}

TEST_CASE("topological order and cycle witness") {
  Succ dag{{1, 2}, {3}, {3}, {}};
  auto order = topological_order(dag);
  REQUIRE(order);
  CHECK(order->front() == 0);
  CHECK(order->back() == 3);
  CHECK(find_cycle(dag).empty());

  Succ cyc{{1}, {2}, {0}, {}};
  CHECK_FALSE(topological_order(cyc));
  auto c = find_cycle(cyc);
  REQUIRE(c.size() == 4);
  CHECK(c.front() == c.back());
  CHECK_THROWS_AS(reduce_implied_edges(cyc), InternalError);
}

TEST_CASE("reduction keeps reachability on random DAGs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto n = 1 + rng() % 60;
    auto succ = random_dag(rng, n, 0.15);
    auto red = reduce_implied_edges(succ);
    CHECK(closure(red) == closure(succ));
    // No surviving edge is implied by another path.
    for (std::uint32_t u = 0; u < n; ++u) {
      for (auto w : red[u]) {
        auto without = red;
        auto& s = without[u];
        s.erase(std::find(s.begin(), s.end(), w));
        CHECK_FALSE(closure(without)[u][w]);
      }
    }
  }
}

TEST_CASE("tracker releases hard dependents once all predecessors finish") {
  auto inst = parse_instance(kTwoVertex);
  auto layout = std::make_shared<BucketLayout>(build_buckets(inst));
  auto g = build_dependencies(inst, layout, SearchMode::mono);
  reduce_implied_edges(g);
  DependencyTracker t(g);
  auto ready = t.initial_releases();
  std::size_t finished = 0;
  while (!ready.empty()) {
    auto j = ready.back();
    ready.pop_back();
    CHECK(t.state(j) == JobState::released);
    t.start(j);
    CHECK(t.state(j) == JobState::processing);
    t.remove_dependency(j, Outcome::processed, ready);
    CHECK(t.state(j) == JobState::done);
    ++finished;
  }
  CHECK(finished == g.job_count);
  CHECK(t.done_count() == g.job_count);
  CHECK_THROWS_AS(t.remove_dependency(0, Outcome::processed), InternalError);
}

TEST_CASE("tracker group is satisfied by the first non-skipped member") {
  auto inst = parse_instance(kTwoVertex);
  auto layout = std::make_shared<BucketLayout>(build_buckets(inst));
  JobGraph g;
  g.mode = SearchMode::bidir;
  g.layout = layout;
  g.job_count = 4;
  g.successors.assign(4, {});
  g.member_of.assign(4, {});
  g.pulls.assign(4, {});
  // 3 waits hard on 0 and on the group {1, 2}.
  g.successors[0] = {3};
  g.groups.push_back({3, {1, 2}});
  g.member_of[1] = {0};
  g.member_of[2] = {0};
  g.seeds = {0, 1, 2};
  DependencyTracker t(g);
  auto ready = t.initial_releases();
  CHECK(ready.size() == 3);
  for (JobId j : {0u, 1u, 2u}) t.start(j);
  CHECK(t.remove_dependency(0, Outcome::cancelled).empty());
  CHECK(t.remove_dependency(1, Outcome::skipped).empty());
  CHECK(t.remaining(3) == 1);
  auto rel = t.remove_dependency(2, Outcome::cancelled);
  CHECK(rel == std::vector<JobId>{3});
  CHECK_THROWS_AS(t.start(0), InternalError);
}
