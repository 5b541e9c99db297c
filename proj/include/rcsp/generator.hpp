#pragma once

#include <cstdint>

#include "rcsp/instance.hpp"

namespace rcsp {

struct GeneratorOptions {
  std::size_t vertex_count = 10;
  double density = 0.5;
  /// 1: time window only; 2: + ng; >= 3: time window, (k - 2) capacities, ng.
  std::size_t resource_count = 2;
  std::size_t ng_size = 4;
  std::uint64_t seed = 1;

  Accum max_q = 10;
  /// Extra width added above each vertex's earliest arrival.
  Accum window_slack = 30;
  Accum max_load = 5;
  Accum capacity = 25;
  /// Edge costs are drawn uniformly from [cost_min, cost_max] in steps of 0.01.
  double cost_min = -20.0;
  double cost_max = 40.0;
  int max_attempts = 200;
};

/// Seeded synthetic instance. Source is vertex 0, sink is vertex n-1; there are
/// no edges into the source or out of the sink. At least one feasible s-t path
/// is guaranteed. Throws ValidationError after max_attempts failed draws.
Instance generate_random(const GeneratorOptions& options);
Instance generate_random(std::size_t n_vertices, double density, std::size_t resource_count, std::size_t ng_size,
                         std::uint64_t seed);

}  // namespace rcsp
