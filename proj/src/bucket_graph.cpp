#include "rcsp/bucket_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rcsp {

Interval BucketLayout::interval(VertexId v, std::uint32_t level) const {
  Accum lo = first_[v] + static_cast<Accum>(level) * size_[v];
  return {lo, std::min(lo + size_[v], end_[v])};
}

std::vector<Bucket> BucketLayout::buckets() const {
  std::vector<Bucket> out;
  out.reserve(bucket_count());
  for (BucketId b = 0; b < bucket_count(); ++b) out.push_back({vertex(b), level(b), interval(b)});
  return out;
}

Accum bucket_size(const Instance& inst, VertexId v) {
  const auto p = inst.primary();
  auto in = inst.in_edges(v);
  if (in.empty()) return inst.upper(p, v) - inst.lower(p, v) + 1;
  Accum best = std::numeric_limits<Accum>::max();
  for (auto e : in) best = std::min(best, inst.edge(e).q[p]);
  return best;
}

BucketLayout build_buckets(const Instance& inst) {
  BucketLayout l;
  const auto n = inst.vertex_count();
  const auto p = inst.primary();
  l.first_.resize(n);
  l.end_.resize(n);
  l.size_.resize(n);
  l.count_.resize(n);
  l.offset_.resize(n);
  std::uint32_t next = 0;
  for (VertexId v = 0; v < n; ++v) {
    l.first_[v] = inst.lower(p, v);
    l.end_[v] = inst.upper(p, v) + 1;
    l.size_[v] = bucket_size(inst, v);
    const Accum width = l.end_[v] - l.first_[v];
    l.count_[v] = static_cast<std::uint32_t>((width + l.size_[v] - 1) / l.size_[v]);
    l.offset_[v] = next;
    next += l.count_[v];
    l.vertex_of_.insert(l.vertex_of_.end(), l.count_[v], v);
  }
  return l;
}

std::vector<PullSource> plan_pull_sources(const Instance& inst, const BucketLayout& layout, Direction dir, VertexId v,
                                          std::uint32_t level) {
  const auto p = inst.primary();
  const bool window = inst.resource(p).kind == ResourceKind::interval_timewindow;
  const auto target = layout.interval(v, level);
  std::vector<PullSource> out;
  if (dir == Direction::forward) {
    for (auto e : inst.in_edges(v)) {
      const auto& edge = inst.edge(e);
      const auto x = edge.tail;
      const Accum q = edge.q[p];
      Accum lo = window && target.lo == inst.lower(p, v) ? inst.lower(p, x) : target.lo - q;
      Accum hi = target.hi - 1 - q;
      lo = std::max(lo, inst.lower(p, x));
      hi = std::min(hi, inst.upper(p, x));
      if (lo > hi) continue;
      out.push_back({e, x, layout.level_of(x, lo), layout.level_of(x, hi)});
    }
  } else {
    for (auto e : inst.out_edges(v)) {
      const auto& edge = inst.edge(e);
      const auto y = edge.head;
      const Accum q = edge.q[p];
      Accum lo = target.lo + q;
      Accum hi = target.hi == inst.upper(p, v) + 1 ? inst.upper(p, y) : target.hi - 1 + q;
      lo = std::max(lo, inst.lower(p, y));
      hi = std::min(hi, inst.upper(p, y));
      if (lo > hi) continue;
      out.push_back({e, y, layout.level_of(y, lo), layout.level_of(y, hi)});
    }
  }
  return out;
}

std::string_view to_string(JobKind kind) {
  switch (kind) {
    case JobKind::forward:
      return "f";
    case JobKind::backward:
      return "b";
    case JobKind::splice:
      return "s";
  }
  return "?";
}

std::string JobGraph::name(JobId j) const {
  const auto b = bucket(j);
  return std::string(to_string(kind(j))) + std::to_string(layout->vertex(b)) + "_" + std::to_string(layout->level(b));
}

std::vector<std::uint32_t> JobGraph::dependency_counts() const {
  std::vector<std::uint32_t> count(job_count, 0);
  for (const auto& succ : successors) {
    for (auto w : succ) ++count[w];
  }
  for (const auto& g : groups) ++count[g.owner];
  return count;
}

std::size_t JobGraph::hard_edge_count() const {
  std::size_t n = 0;
  for (const auto& s : successors) n += s.size();
  return n;
}

namespace {

void sort_unique(std::vector<JobId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

JobGraph build_dependencies(const Instance& inst, std::shared_ptr<const BucketLayout> layout, SearchMode mode) {
  JobGraph g;
  g.mode = mode;
  g.layout = layout;
  const auto& L = *layout;
  const std::size_t B = L.bucket_count();
  g.job_count = mode == SearchMode::mono ? B : 3 * B;
  g.successors.assign(g.job_count, {});
  g.member_of.assign(g.job_count, {});
  g.pulls.assign(g.job_count, {});

  const auto s = inst.source();
  const auto t = inst.sink();
  std::vector<std::vector<JobId>> preds(g.job_count);

  auto add_directional = [&](JobKind kind, Direction dir) {
    for (BucketId b = 0; b < B; ++b) {
      const auto v = L.vertex(b);
      const auto n = L.level(b);
      const auto j = g.job(kind, b);
      const bool seed = dir == Direction::forward ? (v == s && n == 0) : (v == t && n + 1 == L.levels(v));
      if (seed) {
        g.seeds.push_back(j);
        continue;
      }
      if (dir == Direction::forward && n > 0) preds[j].push_back(g.job(kind, L.id(v, n - 1)));
      if (dir == Direction::backward && n + 1 < L.levels(v)) preds[j].push_back(g.job(kind, L.id(v, n + 1)));
      g.pulls[j] = plan_pull_sources(inst, L, dir, v, n);
      for (const auto& src : g.pulls[j]) {
        for (auto k = src.first; k <= src.last; ++k) preds[j].push_back(g.job(kind, L.id(src.from, k)));
      }
    }
  };
  add_directional(JobKind::forward, Direction::forward);
  if (mode == SearchMode::bidir) {
    add_directional(JobKind::backward, Direction::backward);
    for (BucketId b = 0; b < B; ++b) {
      const auto y = L.vertex(b);
      const auto n = L.level(b);
      const auto j = g.job(JobKind::splice, b);
      preds[j].push_back(g.job(JobKind::backward, b));
      auto add_group = [&](BucketId member) {
        g.groups.push_back({j, {g.job(JobKind::forward, member), g.job(JobKind::splice, member)}});
      };
      if (n > 0) add_group(L.id(y, n - 1));
      std::vector<BucketId> sources;
      for (const auto& src : plan_pull_sources(inst, L, Direction::forward, y, n)) {
        for (auto k = src.first; k <= src.last; ++k) sources.push_back(L.id(src.from, k));
      }
      sort_unique(sources);
      for (auto m : sources) add_group(m);
    }
  }

  for (JobId j = 0; j < g.job_count; ++j) {
    sort_unique(preds[j]);
    for (auto u : preds[j]) g.successors[u].push_back(j);
  }
  for (std::uint32_t gi = 0; gi < g.groups.size(); ++gi) {
    for (auto m : g.groups[gi].members) g.member_of[m].push_back(gi);
  }

  // Acyclicity over hard edges plus group-member edges.
  std::vector<std::vector<std::uint32_t>> all = g.successors;
  for (const auto& grp : g.groups) {
    for (auto m : grp.members) all[m].push_back(grp.owner);
  }
  if (!topological_order(all)) {
    auto cycle = find_cycle(all);
    std::string witness;
    for (auto c : cycle) witness += (witness.empty() ? "" : " -> ") + g.name(c);
    throw InternalError("dependency graph has a cycle: " + witness);
  }
  return g;
}

std::optional<std::vector<std::uint32_t>> topological_order(const std::vector<std::vector<std::uint32_t>>& succ) {
  const auto n = succ.size();
  std::vector<std::uint32_t> indeg(n, 0);
  for (const auto& s : succ) {
    for (auto w : s) ++indeg[w];
  }
  std::vector<std::uint32_t> order;
  order.reserve(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    if (indeg[v] == 0) order.push_back(v);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (auto w : succ[order[i]]) {
      if (--indeg[w] == 0) order.push_back(w);
    }
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

std::vector<std::uint32_t> find_cycle(const std::vector<std::vector<std::uint32_t>>& succ) {
  const auto n = succ.size();
  std::vector<std::uint8_t> color(n, 0);  // 0 new, 1 on stack, 2 finished
  std::vector<std::uint32_t> parent(n, 0);
  std::vector<std::pair<std::uint32_t, std::size_t>> stack;
  for (std::uint32_t root = 0; root < n; ++root) {
    if (color[root]) continue;
    stack.push_back({root, 0});
    color[root] = 1;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i == succ[v].size()) {
        color[v] = 2;
        stack.pop_back();
        continue;
      }
      auto w = succ[v][i++];
      if (color[w] == 1) {
        std::vector<std::uint32_t> cycle{w};
        for (auto u = v; u != w; u = parent[u]) cycle.push_back(u);
        cycle.push_back(w);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (color[w] == 0) {
        color[w] = 1;
        parent[w] = v;
        stack.push_back({w, 0});
      }
    }
  }
  return {};
}

std::vector<std::vector<std::uint32_t>> reduce_implied_edges(const std::vector<std::vector<std::uint32_t>>& succ) {
  const auto n = succ.size();
  auto order = topological_order(succ);
  if (!order) throw InternalError("transitive reduction requires an acyclic graph");
  std::vector<std::uint32_t> pos(n);
  for (std::uint32_t i = 0; i < n; ++i) pos[(*order)[i]] = i;

  // For each node, visit successors closest in topological order first; a
  // successor already reached from an earlier one is implied.
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t now = 0;
  std::vector<std::uint32_t> sorted, stack;
  std::vector<std::vector<std::uint32_t>> out(n);
  for (std::uint32_t u = 0; u < n; ++u) {
    if (succ[u].empty()) continue;
    ++now;
    sorted.assign(succ[u].begin(), succ[u].end());
    std::sort(sorted.begin(), sorted.end(), [&](auto a, auto b) { return pos[a] < pos[b]; });
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    const auto limit = pos[sorted.back()];
    std::vector<std::uint32_t> kept;
    for (auto w : sorted) {
      if (stamp[w] == now) continue;
      kept.push_back(w);
      stack.assign(1, w);
      stamp[w] = now;
      while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        for (auto y : succ[x]) {
          if (pos[y] <= limit && stamp[y] != now) {
            stamp[y] = now;
            stack.push_back(y);
          }
        }
      }
    }
    std::sort(kept.begin(), kept.end());
    for (auto w : succ[u]) {
      if (std::binary_search(kept.begin(), kept.end(), w) &&
          std::find(out[u].begin(), out[u].end(), w) == out[u].end()) {
        out[u].push_back(w);
      }
    }
  }
  return out;
}

void reduce_implied_edges(JobGraph& g) { g.successors = reduce_implied_edges(g.successors); }

DependencyTracker::DependencyTracker(const JobGraph& graph)
    : graph_(graph),
      count_(new std::atomic<std::uint32_t>[graph.job_count]),
      state_(new std::atomic<std::uint8_t>[graph.job_count]),
      group_done_(new std::atomic<bool>[graph.groups.size()]) {
  auto counts = graph.dependency_counts();
  for (std::size_t j = 0; j < graph.job_count; ++j) {
    count_[j].store(counts[j]);
    state_[j].store(static_cast<std::uint8_t>(JobState::not_released));
  }
  for (std::size_t g = 0; g < graph.groups.size(); ++g) group_done_[g].store(false);
}

std::vector<JobId> DependencyTracker::initial_releases() {
  std::vector<JobId> out;
  for (JobId j = 0; j < graph_.job_count; ++j) {
    if (count_[j].load() != 0) continue;
    auto expected = static_cast<std::uint8_t>(JobState::not_released);
    if (state_[j].compare_exchange_strong(expected, static_cast<std::uint8_t>(JobState::released))) out.push_back(j);
  }
  return out;
}

void DependencyTracker::start(JobId job) {
  auto expected = static_cast<std::uint8_t>(JobState::released);
  if (!state_[job].compare_exchange_strong(expected, static_cast<std::uint8_t>(JobState::processing))) {
    throw InternalError("job " + graph_.name(job) + " started while not released");
  }
}

void DependencyTracker::decrement(JobId job, std::vector<JobId>& released) {
  auto before = count_[job].fetch_sub(1);
  if (before == 0) throw InternalError("dependency count underflow at " + graph_.name(job));
  if (before == 1) {
    auto expected = static_cast<std::uint8_t>(JobState::not_released);
    if (!state_[job].compare_exchange_strong(expected, static_cast<std::uint8_t>(JobState::released))) {
      throw InternalError("job " + graph_.name(job) + " released twice");
    }
    released.push_back(job);
  }
}

void DependencyTracker::remove_dependency(JobId finished, Outcome outcome, std::vector<JobId>& released) {
  auto expected = static_cast<std::uint8_t>(JobState::processing);
  if (!state_[finished].compare_exchange_strong(expected, static_cast<std::uint8_t>(JobState::done))) {
    throw InternalError("job " + graph_.name(finished) +
                        (expected == static_cast<std::uint8_t>(JobState::done) ? " finished twice" : " finished before start"));
  }
  done_.fetch_add(1);
  for (auto w : graph_.successors[finished]) decrement(w, released);
  if (outcome == Outcome::skipped) return;
  for (auto gi : graph_.member_of[finished]) {
    if (!group_done_[gi].exchange(true)) decrement(graph_.groups[gi].owner, released);
  }
}

std::vector<JobId> DependencyTracker::remove_dependency(JobId finished, Outcome outcome) {
  std::vector<JobId> out;
  remove_dependency(finished, outcome, out);
  return out;
}

std::string to_dot(const JobGraph& g) {
  std::ostringstream out;
  out << "digraph dependencies {\n";
  for (JobId j = 0; j < g.job_count; ++j) {
    const auto iv = g.layout->interval(g.bucket(j));
    out << "  \"" << g.name(j) << "\" [label=\"" << g.name(j) << "\\n[" << iv.lo << "," << iv.hi << ")\"];\n";
  }
  for (JobId u = 0; u < g.job_count; ++u) {
    for (auto w : g.successors[u]) out << "  \"" << g.name(u) << "\" -> \"" << g.name(w) << "\";\n";
  }
  for (const auto& grp : g.groups) {
    for (auto m : grp.members) {
      out << "  \"" << g.name(m) << "\" -> \"" << g.name(grp.owner) << "\" [style=dashed];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace rcsp
