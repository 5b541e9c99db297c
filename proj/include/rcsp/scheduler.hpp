#pragma once

#include <deque>
#include <functional>
#include <optional>
#include <vector>

#include "rcsp/bucket_graph.hpp"

namespace rcsp {

enum class QueuePolicy : std::uint8_t { fifo, midpoint_balance };

struct JobQueues {
  std::deque<JobId> forward, backward, splice;
  bool empty() const { return forward.empty() && backward.empty() && splice.empty(); }
  std::size_t size() const { return forward.size() + backward.size() + splice.size(); }
};

/// Processed (not cancelled) directional buckets so far.
struct DirectionBalance {
  std::size_t forward = 0;
  std::size_t backward = 0;
};

/// Splice first; otherwise the direction with strictly fewer processed
/// buckets, ties to forward, falling back to the other queue when the
/// preferred one is empty. nullopt when all queues are empty.
std::optional<JobId> next_job(JobQueues& queues, const DirectionBalance& balance);

struct ExecuteStats {
  std::size_t jobs_run = 0;
  std::size_t max_concurrency = 0;
  double wall_seconds = 0;
  DirectionBalance balance;
  /// Set when the queues drained with unfinished jobs left; `stuck` then
  /// holds the unreleased jobs.
  bool deadlock = false;
  std::vector<JobId> stuck;
};

using JobBody = std::function<Outcome(JobId job, unsigned worker)>;

/// Runs every job of the tracker's graph exactly once, each only after its
/// dependencies are done. One worker runs on the calling thread. The first
/// exception thrown by a body stops the run and is rethrown.
ExecuteStats execute(DependencyTracker& tracker, const JobBody& body, QueuePolicy policy, unsigned workers);

/// min(hardware threads, 16), overridden by RCSP_THREADS when set.
unsigned default_thread_count();

}  // namespace rcsp
