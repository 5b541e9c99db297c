#include "rcsp/scheduler.hpp"

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace rcsp {

std::optional<JobId> next_job(JobQueues& q, const DirectionBalance& balance) {
  auto pop = [](std::deque<JobId>& d) {
    JobId j = d.front();
    d.pop_front();
    return j;
  };
  if (!q.splice.empty()) return pop(q.splice);
  const bool prefer_backward = balance.backward < balance.forward;
  auto& first = prefer_backward ? q.backward : q.forward;
  auto& second = prefer_backward ? q.forward : q.backward;
  if (!first.empty()) return pop(first);
  if (!second.empty()) return pop(second);
  return std::nullopt;
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("RCSP_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return std::clamp(hw, 1u, 16u);
}

namespace {

class Executor {
 public:
  Executor(DependencyTracker& tracker, const JobBody& body, QueuePolicy policy)
      : tracker_(tracker), graph_(tracker.graph()), body_(body), policy_(policy) {}

  ExecuteStats run(unsigned workers) {
    const auto t0 = std::chrono::steady_clock::now();
    for (auto j : tracker_.initial_releases()) enqueue(j);
    if (queues_.empty()) finished_ = true;
    if (workers <= 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(workers - 1);
      for (unsigned w = 1; w < workers; ++w) pool.emplace_back([this, w] { work(w); });
      work(0);
      for (auto& t : pool) t.join();
    }
    if (error_) std::rethrow_exception(error_);
    stats_.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    stats_.balance = balance_;
    if (tracker_.done_count() != graph_.job_count) {
      stats_.deadlock = true;
      for (JobId j = 0; j < graph_.job_count; ++j) {
        if (tracker_.state(j) == JobState::not_released) stats_.stuck.push_back(j);
      }
    }
    return stats_;
  }

 private:
  void enqueue(JobId j) {
    if (policy_ == QueuePolicy::fifo) {
      queues_.forward.push_back(j);
      return;
    }
    switch (graph_.kind(j)) {
      case JobKind::forward:
        queues_.forward.push_back(j);
        break;
      case JobKind::backward:
        queues_.backward.push_back(j);
        break;
      case JobKind::splice:
        queues_.splice.push_back(j);
        break;
    }
  }

  void work(unsigned worker) {
    std::vector<JobId> released;
    std::unique_lock lock(mu_);
    for (;;) {
      cv_.wait(lock, [&] { return finished_ || !queues_.empty(); });
      if (finished_) return;
      auto job = next_job(queues_, balance_);
      ++in_flight_;
      stats_.max_concurrency = std::max(stats_.max_concurrency, in_flight_);
      lock.unlock();

      Outcome outcome = Outcome::processed;
      released.clear();
      try {
        tracker_.start(*job);
        outcome = body_(*job, worker);
        tracker_.remove_dependency(*job, outcome, released);
      } catch (...) {
        lock.lock();
        if (!error_) error_ = std::current_exception();
        finished_ = true;
        --in_flight_;
        cv_.notify_all();
        return;
      }

      lock.lock();
      --in_flight_;
      ++stats_.jobs_run;
      if (outcome == Outcome::processed) {
        auto kind = graph_.kind(*job);
        if (kind == JobKind::forward) ++balance_.forward;
        if (kind == JobKind::backward) ++balance_.backward;
      }
      for (auto j : released) enqueue(j);
      if (queues_.empty() && in_flight_ == 0) finished_ = true;
      if (finished_ || released.size() > 1) {
        cv_.notify_all();
      } else if (!released.empty()) {
        cv_.notify_one();
      }
    }
  }

  DependencyTracker& tracker_;
  const JobGraph& graph_;
  const JobBody& body_;
  QueuePolicy policy_;
  std::mutex mu_;
  std::condition_variable cv_;
  JobQueues queues_;
  DirectionBalance balance_;
  std::size_t in_flight_ = 0;
  bool finished_ = false;
  std::exception_ptr error_;
  ExecuteStats stats_;
};

}  // namespace

ExecuteStats execute(DependencyTracker& tracker, const JobBody& body, QueuePolicy policy, unsigned workers) {
  return Executor(tracker, body, policy).run(workers);
}

}  // namespace rcsp
