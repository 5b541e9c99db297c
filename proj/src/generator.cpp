#include "rcsp/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <random>

namespace rcsp {
namespace {

constexpr Accum kUnreached = std::numeric_limits<Accum>::max();

struct Draw {
  std::vector<Edge> edges;
  std::vector<Accum> earliest;
  std::vector<EdgeId> tree_edge;
};

// Earliest primary arrival from the source, with the edge reaching each vertex.
void earliest_arrival(std::size_t n, VertexId s, Draw& d) {
  std::vector<std::vector<EdgeId>> out(n);
  for (EdgeId e = 0; e < d.edges.size(); ++e) out[d.edges[e].tail].push_back(e);
  d.earliest.assign(n, kUnreached);
  d.tree_edge.assign(n, kNoEdge);
  using Item = std::pair<Accum, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  d.earliest[s] = 0;
  pq.push({0, s});
  while (!pq.empty()) {
    auto [t, v] = pq.top();
    pq.pop();
    if (t != d.earliest[v]) continue;
    for (auto e : out[v]) {
      const auto& edge = d.edges[e];
      Accum nt = t + edge.q[0];
      if (nt < d.earliest[edge.head]) {
        d.earliest[edge.head] = nt;
        d.tree_edge[edge.head] = e;
        pq.push({nt, edge.head});
      }
    }
  }
}

}  // namespace

Instance generate_random(const GeneratorOptions& opt) {
  const auto n = opt.vertex_count;
  if (n < 2) throw ValidationError("generator needs at least two vertices");
  if (!(opt.density > 0.0 && opt.density <= 1.0)) throw ValidationError("density must be in (0, 1]");
  if (opt.ng_size < 1) throw ValidationError("ng size must be at least 1");
  if (opt.resource_count < 1) throw ValidationError("at least one resource is required");
  if (opt.max_q < 1) throw ValidationError("max_q must be positive");

  std::mt19937_64 rng(opt.seed);
  const VertexId s = 0;
  const auto t = static_cast<VertexId>(n - 1);
  const std::size_t k = opt.resource_count;
  const bool has_ng = k >= 2;
  const std::size_t capacities = k >= 3 ? k - 2 : 0;
  const auto cost_lo = static_cast<std::int64_t>(std::llround(opt.cost_min * 100));
  const auto cost_hi = static_cast<std::int64_t>(std::llround(opt.cost_max * 100));

  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<Accum> q_dist(1, opt.max_q);
  std::uniform_int_distribution<Accum> load_dist(0, opt.max_load);
  std::uniform_int_distribution<std::int64_t> cost_dist(cost_lo, cost_hi);

  Draw d;
  int attempt = 0;
  for (;; ++attempt) {
    if (attempt >= opt.max_attempts) {
      throw ValidationError("could not draw an instance with a reachable sink; density too low");
    }
    d.edges.clear();
    for (VertexId u = 0; u < n; ++u) {
      if (u == t) continue;
      for (VertexId v = 0; v < n; ++v) {
        if (v == u || v == s) continue;
        if (coin(rng) >= opt.density) continue;
        Edge e;
        e.tail = u;
        e.head = v;
        e.cost = Cost::from_ticks(cost_dist(rng) * (Cost::kScale / 100));
        e.q.assign(k, 0);
        e.q[0] = q_dist(rng);
        for (std::size_t c = 0; c < capacities; ++c) e.q[1 + c] = load_dist(rng);
        d.edges.push_back(std::move(e));
      }
    }
    earliest_arrival(n, s, d);
    if (d.earliest[t] != kUnreached) break;
  }

  InstanceSpec spec;
  spec.vertex_count = n;
  spec.primary = 0;
  spec.resources.push_back({0, ResourceKind::interval_timewindow});
  for (std::size_t c = 0; c < capacities; ++c) {
    spec.resources.push_back({static_cast<ResourceId>(1 + c), ResourceKind::interval_additive});
  }
  if (has_ng) spec.resources.push_back({static_cast<ResourceId>(k - 1), ResourceKind::bitset_ng});
  spec.lower.assign(k, {});
  spec.upper.assign(k, {});
  spec.ng.assign(k, {});

  // Time windows: every vertex opens no later than its earliest arrival, so
  // the earliest-arrival tree path is feasible without waiting.
  std::uniform_int_distribution<Accum> slack_dist(0, opt.window_slack);
  for (VertexId v = 0; v < n; ++v) {
    Accum e = d.earliest[v];
    if (v == s) {
      spec.lower[0].push_back(0);
      spec.upper[0].push_back(0);
    } else if (e == kUnreached) {
      spec.lower[0].push_back(0);
      spec.upper[0].push_back(opt.window_slack);
    } else {
      Accum open = std::max<Accum>(0, e - slack_dist(rng));
      spec.lower[0].push_back(open);
      spec.upper[0].push_back(e + slack_dist(rng));
    }
  }

  // Capacities: widen any vertex whose tree-path load exceeds the default.
  for (std::size_t c = 0; c < capacities; ++c) {
    const auto r = 1 + c;
    std::vector<Accum> load(n, 0);
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return d.earliest[a] < d.earliest[b]; });
    for (auto v : order) {
      if (d.tree_edge[v] == kNoEdge) continue;
      const auto& e = d.edges[d.tree_edge[v]];
      load[v] = load[e.tail] + e.q[r];
    }
    for (VertexId v = 0; v < n; ++v) {
      spec.lower[r].push_back(0);
      spec.upper[r].push_back(std::max(opt.capacity, load[v]));
    }
  }

  if (has_ng) {
    const auto r = k - 1;
    const auto size = std::min(opt.ng_size, n);
    std::vector<VertexId> others;
    for (VertexId v = 0; v < n; ++v) {
      others.clear();
      for (VertexId u = 0; u < n; ++u) {
        if (u != v) others.push_back(u);
      }
      std::shuffle(others.begin(), others.end(), rng);
      VertexSet set(n);
      set.insert(v);
      for (std::size_t i = 0; i + 1 < size; ++i) set.insert(others[i]);
      spec.ng[r].push_back(std::move(set));
    }
  }

  spec.edges = std::move(d.edges);
  spec.source = s;
  spec.sink = t;
  return Instance::create(std::move(spec));
}

Instance generate_random(std::size_t n_vertices, double density, std::size_t resource_count, std::size_t ng_size,
                         std::uint64_t seed) {
  GeneratorOptions opt;
  opt.vertex_count = n_vertices;
  opt.density = density;
  opt.resource_count = resource_count;
  opt.ng_size = ng_size;
  opt.seed = seed;
  return generate_random(opt);
}

}  // namespace rcsp
