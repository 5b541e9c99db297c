#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "rcsp/instance.hpp"

namespace rcsp::oracle {

/// Accumulation per resource id; `ng` holds memories for bitset resources
/// (empty sets for interval ones).
struct ResourceState {
  std::vector<Accum> values;
  std::vector<VertexSet> ng;
  bool operator==(const ResourceState&) const = default;
};

struct EnumeratedPath {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  Cost cost;
  ResourceState state;
  std::vector<ResourceState> states;  // one per vertex on the path

  VertexId end() const { return vertices.back(); }
};

class LimitExceeded : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Every feasible partial path starting at the source, including [s].
/// Throws LimitExceeded past max_paths.
std::vector<EnumeratedPath> enumerate_feasible_paths(const Instance& instance, std::size_t max_paths = 1'000'000);

/// Cost, every interval accumulation <=, every ng memory a subset.
bool dominates(const Instance& instance, const EnumeratedPath& a, const EnumeratedPath& b);

/// Undominated subset of paths ending at one vertex. Paths with identical
/// cost and state collapse to the first in (cost, state, edges) order.
std::vector<EnumeratedPath> pareto_filter(const Instance& instance, std::vector<EnumeratedPath> paths);

/// Feasible s-t paths.
std::vector<EnumeratedPath> complete_paths(const Instance& instance, std::size_t max_paths = 1'000'000);

std::optional<Cost> solve_exact(const Instance& instance, std::size_t max_paths = 1'000'000);

}  // namespace rcsp::oracle
