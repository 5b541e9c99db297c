#include "rcsp/oracle.hpp"

#include <algorithm>
#include <tuple>

namespace rcsp::oracle {
namespace {

class Enumerator {
 public:
  Enumerator(const Instance& inst, std::size_t max_paths) : inst_(inst), max_(max_paths) {}

  std::vector<EnumeratedPath> run() {
    const auto s = inst_.source();
    EnumeratedPath p;
    p.vertices = {s};
    p.state.values.assign(inst_.resource_count(), 0);
    p.state.ng.assign(inst_.resource_count(), VertexSet());
    for (ResourceId r = 0; r < inst_.resource_count(); ++r) {
      if (is_interval(inst_.resource(r).kind)) {
        p.state.values[r] = inst_.lower(r, s);
      } else {
        p.state.ng[r] = VertexSet(inst_.vertex_count(), {s});
      }
    }
    p.states = {p.state};
    dfs(p);
    return std::move(out_);
  }

 private:
  void dfs(EnumeratedPath& p) {
    if (out_.size() >= max_) throw LimitExceeded("oracle path limit exceeded");
    out_.push_back(p);
    const auto v = p.end();
    for (auto e : inst_.out_edges(v)) {
      const auto& edge = inst_.edge(e);
      ResourceState next = p.state;
      bool ok = true;
      for (ResourceId r = 0; r < inst_.resource_count() && ok; ++r) {
        const auto kind = inst_.resource(r).kind;
        if (is_interval(kind)) {
          auto val = apply_ref(kind, p.state.values[r], edge.q[r], inst_.lower(r, edge.head), inst_.upper(r, edge.head),
                               Direction::forward);
          if (val) {
            next.values[r] = *val;
          } else {
            ok = false;
          }
        } else {
          auto mem = apply_ng(p.state.ng[r], edge.head, inst_.ng(r, edge.head));
          if (mem) {
            next.ng[r] = std::move(*mem);
          } else {
            ok = false;
          }
        }
      }
      if (!ok) continue;
      const auto saved = p.state;
      p.vertices.push_back(edge.head);
      p.edges.push_back(e);
      p.cost += edge.cost;
      p.state = next;
      p.states.push_back(next);
      dfs(p);
      p.states.pop_back();
      p.state = saved;
      p.cost = p.cost - edge.cost;
      p.edges.pop_back();
      p.vertices.pop_back();
    }
  }

  const Instance& inst_;
  std::size_t max_;
  std::vector<EnumeratedPath> out_;
};

}  // namespace

std::vector<EnumeratedPath> enumerate_feasible_paths(const Instance& instance, std::size_t max_paths) {
  return Enumerator(instance, max_paths).run();
}

bool dominates(const Instance& inst, const EnumeratedPath& a, const EnumeratedPath& b) {
  if (a.cost > b.cost) return false;
  for (ResourceId r = 0; r < inst.resource_count(); ++r) {
    if (is_interval(inst.resource(r).kind)) {
      if (a.state.values[r] > b.state.values[r]) return false;
    } else if (!a.state.ng[r].subset_of(b.state.ng[r])) {
      return false;
    }
  }
  return true;
}

std::vector<EnumeratedPath> pareto_filter(const Instance& inst, std::vector<EnumeratedPath> paths) {
  std::sort(paths.begin(), paths.end(), [&](const EnumeratedPath& a, const EnumeratedPath& b) {
    std::size_t pa = 0, pb = 0;
    for (const auto& m : a.state.ng) pa += m.count();
    for (const auto& m : b.state.ng) pb += m.count();
    return std::tie(a.cost, a.state.values, pa, a.state.ng, a.edges) <
           std::tie(b.cost, b.state.values, pb, b.state.ng, b.edges);
  });
  std::vector<EnumeratedPath> kept;
  for (auto& p : paths) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [&](const EnumeratedPath& k) { return dominates(inst, k, p); });
    if (!dominated) kept.push_back(std::move(p));
  }
  return kept;
}

std::vector<EnumeratedPath> complete_paths(const Instance& instance, std::size_t max_paths) {
  auto all = enumerate_feasible_paths(instance, max_paths);
  std::vector<EnumeratedPath> out;
  for (auto& p : all) {
    if (p.end() == instance.sink()) out.push_back(std::move(p));
  }
  return out;
}

std::optional<Cost> solve_exact(const Instance& instance, std::size_t max_paths) {
  std::optional<Cost> best;
  for (const auto& p : complete_paths(instance, max_paths)) {
    if (!best || p.cost < *best) best = p.cost;
  }
  return best;
}

}  // namespace rcsp::oracle
