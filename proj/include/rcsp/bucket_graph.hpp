#pragma once

#include <atomic>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rcsp/instance.hpp"

namespace rcsp {

using BucketId = std::uint32_t;

/// Half-open primary range [lo, hi).
struct Interval {
  Accum lo = 0;
  Accum hi = 0;
  bool contains(Accum v) const { return lo <= v && v < hi; }
  bool operator==(const Interval&) const = default;
};

struct Bucket {
  VertexId vertex = 0;
  std::uint32_t level = 0;
  Interval range;
};

/// Partition of every vertex's primary range [a_v, b_v] into equal-size
/// buckets (the last one may be shorter). Forward and backward buckets share
/// the same intervals; bucket ids are dense, grouped by vertex, ascending level.
class BucketLayout {
 public:
  std::size_t vertex_count() const { return first_.size(); }
  std::size_t bucket_count() const { return vertex_of_.size(); }
  std::uint32_t levels(VertexId v) const { return count_[v]; }
  Accum size(VertexId v) const { return size_[v]; }
  BucketId id(VertexId v, std::uint32_t level) const { return offset_[v] + level; }
  VertexId vertex(BucketId b) const { return vertex_of_[b]; }
  std::uint32_t level(BucketId b) const { return b - offset_[vertex_of_[b]]; }
  Interval interval(VertexId v, std::uint32_t level) const;
  Interval interval(BucketId b) const { return interval(vertex(b), level(b)); }
  /// Level holding `value`; precondition a_v <= value <= b_v.
  std::uint32_t level_of(VertexId v, Accum value) const {
    return static_cast<std::uint32_t>((value - first_[v]) / size_[v]);
  }
  std::vector<Bucket> buckets() const;

 private:
  friend BucketLayout build_buckets(const Instance& instance);
  std::vector<Accum> first_, end_, size_;
  std::vector<std::uint32_t> count_, offset_;
  std::vector<VertexId> vertex_of_;
};

/// Minimum primary consumption over incoming edges; b_v - a_v + 1 when the
/// vertex has none.
Accum bucket_size(const Instance& instance, VertexId v);
BucketLayout build_buckets(const Instance& instance);

/// Contiguous level range [first, last] at `from` whose labels can land in a
/// target bucket over `edge`.
struct PullSource {
  EdgeId edge = 0;
  VertexId from = 0;
  std::uint32_t first = 0;
  std::uint32_t last = 0;
  bool operator==(const PullSource&) const = default;
};

/// Forward: sources at tails of in-edges. Backward: sources at heads of
/// out-edges. Ranges are exact on the primary resource, including clamping
/// of time windows at the vertex's lower (forward) or upper (backward) bound.
std::vector<PullSource> plan_pull_sources(const Instance& instance, const BucketLayout& layout, Direction dir,
                                          VertexId v, std::uint32_t level);

enum class SearchMode : std::uint8_t { mono, bidir };
enum class JobKind : std::uint8_t { forward, backward, splice };
enum class Outcome : std::uint8_t { processed, cancelled, skipped };

std::string_view to_string(JobKind kind);

/// Job DAG over buckets. Job ids are kind-major: forward [0, B), then in bidir
/// mode backward [B, 2B) and splice [2B, 3B). Hard edges must all finish
/// before a job is released; an alternative group is satisfied by the first
/// member finishing with an outcome other than `skipped`.
struct JobGraph {
  struct Group {
    JobId owner = 0;
    std::vector<JobId> members;
  };

  SearchMode mode = SearchMode::mono;
  std::shared_ptr<const BucketLayout> layout;
  std::size_t job_count = 0;
  std::vector<std::vector<JobId>> successors;  // hard edges, u blocks successors[u]
  std::vector<Group> groups;
  std::vector<std::vector<std::uint32_t>> member_of;  // job -> group ids it belongs to
  std::vector<std::vector<PullSource>> pulls;         // per directional job; empty for splices and seeds
  std::vector<JobId> seeds;

  std::size_t buckets() const { return layout->bucket_count(); }
  JobId job(JobKind k, BucketId b) const { return static_cast<JobId>(static_cast<std::size_t>(k) * buckets() + b); }
  JobKind kind(JobId j) const { return static_cast<JobKind>(j / buckets()); }
  BucketId bucket(JobId j) const { return static_cast<BucketId>(j % buckets()); }
  std::string name(JobId j) const;

  /// Hard predecessor count plus one per group.
  std::vector<std::uint32_t> dependency_counts() const;
  std::size_t hard_edge_count() const;
};

/// Materializes the release rules. A directional job depends on its vertical
/// neighbour and on every pull-source bucket; a splice s^y_n depends on b^y_n,
/// on {f^y_{n-1} | s^y_{n-1}} and on {f^x_k | s^x_k} for every forward pull
/// source k of level n. Seeds (f^s_0, and b^t_top in bidir) have no
/// dependencies. Throws InternalError naming a cycle witness if one exists.
JobGraph build_dependencies(const Instance& instance, std::shared_ptr<const BucketLayout> layout, SearchMode mode);

/// Kahn order of a successor-list DAG, or nullopt when cyclic.
std::optional<std::vector<std::uint32_t>> topological_order(const std::vector<std::vector<std::uint32_t>>& succ);
/// A cycle as a node sequence (first == last), empty when acyclic.
std::vector<std::uint32_t> find_cycle(const std::vector<std::vector<std::uint32_t>>& succ);

/// Transitive reduction of a DAG given as successor lists; the result keeps
/// the input order of surviving successors. Throws InternalError when cyclic.
std::vector<std::vector<std::uint32_t>> reduce_implied_edges(const std::vector<std::vector<std::uint32_t>>& succ);
/// Reduces the hard edges of a job graph in place; groups are left untouched.
void reduce_implied_edges(JobGraph& graph);

enum class JobState : std::uint8_t { not_released, released, processing, done };

/// Exactly-once release bookkeeping over a JobGraph. Thread-safe: finishing
/// jobs concurrently is allowed, and each job is returned as released by
/// exactly one call.
class DependencyTracker {
 public:
  explicit DependencyTracker(const JobGraph& graph);

  /// Jobs with no dependencies; marks them released. Call once.
  std::vector<JobId> initial_releases();
  /// released -> processing. Throws InternalError otherwise.
  void start(JobId job);
  /// processing -> done, then decrements dependents. Appends the jobs whose
  /// count reached zero to `released`. Throws InternalError on double finish.
  void remove_dependency(JobId finished, Outcome outcome, std::vector<JobId>& released);
  std::vector<JobId> remove_dependency(JobId finished, Outcome outcome = Outcome::processed);

  JobState state(JobId job) const { return static_cast<JobState>(state_[job].load()); }
  std::uint32_t remaining(JobId job) const { return count_[job].load(); }
  std::size_t done_count() const { return done_.load(); }
  const JobGraph& graph() const { return graph_; }

 private:
  void decrement(JobId job, std::vector<JobId>& released);

  const JobGraph& graph_;
  std::unique_ptr<std::atomic<std::uint32_t>[]> count_;
  std::unique_ptr<std::atomic<std::uint8_t>[]> state_;
  std::unique_ptr<std::atomic<bool>[]> group_done_;
  std::atomic<std::size_t> done_{0};
};

/// DOT rendering of the hard edges (solid) and alternative groups (dashed).
std::string to_dot(const JobGraph& graph);

}  // namespace rcsp
