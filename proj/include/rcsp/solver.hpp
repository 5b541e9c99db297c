#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "rcsp/bucket_graph.hpp"
#include "rcsp/instance.hpp"
#include "rcsp/label_store.hpp"
#include "rcsp/scheduler.hpp"

namespace rcsp {

struct RunConfig {
  std::string name = "base";
  bool parallel = false;
  bool bidirectional = false;
  bool vectorised = false;
  /// Worker count when parallel; 0 picks default_thread_count().
  unsigned threads = 0;
  std::size_t lane_width = 32;

  // Test hooks.
  bool prune = true;              // label dominance on insertion
  bool record_emissions = false;  // keep every splice join (and do not cut joins by the best cost)
  bool reduce_edges = true;

  /// base, parallel, bidir, simd, all. Throws std::invalid_argument.
  static RunConfig preset(std::string_view name);
  unsigned workers() const;
};

std::vector<std::string> preset_names();

struct Path {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  Cost cost;
  /// Final accumulation per resource id (0 for bitset resources).
  std::vector<Accum> values;
};

struct Emission {
  Cost cost;
  LabelHandle forward;
  LabelHandle backward;
  EdgeId edge = kNoEdge;
  auto operator<=>(const Emission&) const = default;
};

struct SolveResult {
  bool feasible = false;
  Cost cost;
  Path path;
  std::size_t labels_created = 0;
  std::size_t buckets_processed = 0;
  std::size_t splices_run = 0;
  double runtime_s = 0;
  ExecuteStats stats;
};

/// Decoded copy of one stored label.
struct StoredLabel {
  Cost cost;
  std::vector<Accum> values;        // per interval resource, in interval_resources() order
  std::vector<std::uint64_t> ng;    // bitset memories concatenated in bitset_resources() order
  LabelHandle parent;
  EdgeId via = kNoEdge;
};

/// Pull labelling over the bucket dependency graph, mono- or bi-directional
/// depending on the config. Construction builds buckets and dependencies;
/// solve() runs the search and is the only part that is timed.
class Solver {
 public:
  Solver(const Instance& instance, RunConfig config);
  ~Solver();
  Solver(const Solver&) = delete;
  Solver& operator=(const Solver&) = delete;

  SolveResult solve();

  const Instance& instance() const;
  const RunConfig& config() const;
  const JobGraph& graph() const;
  const BucketLayout& layout() const;

  // Inspection after solve().
  std::vector<StoredLabel> labels(Direction dir, BucketId bucket) const;
  std::vector<StoredLabel> vertex_labels(Direction dir, VertexId v) const;
  Outcome outcome(JobId job) const;
  /// Every join, sorted; only filled with record_emissions.
  const std::vector<Emission>& emissions() const;
  /// Forward: path s..v of the label. Backward: path v..t. Replayed and checked.
  Path reconstruct(Direction dir, LabelHandle handle) const;
  Path reconstruct(const Emission& emission) const;
  /// CSV: direction,bucket,vertex,level,index,cost,values,parent
  std::string label_dump_csv() const;

  struct EngineBase;

 private:
  std::unique_ptr<EngineBase> engine_;
};

SolveResult solve(const Instance& instance, const RunConfig& config);

/// Replays an edge sequence from the source. Throws InternalError if it is
/// infeasible or does not start at the source.
Path replay_path(const Instance& instance, const std::vector<EdgeId>& edges);

}  // namespace rcsp
