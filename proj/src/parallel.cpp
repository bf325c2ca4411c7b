#include "gpm/parallel.hpp"

#include <algorithm>
#include <array>
#include <condition_variable>
#include <deque>
#include <mutex>
#include <thread>

#include "gpm/detail/parallel_runtime.hpp"
#include "gpm/errors.hpp"

namespace gpm {
namespace detail {

namespace {

struct Task {
  std::array<Vertex, kMaxPatternSize> prefix{};
};

class WorkPool {
 public:
  WorkPool(int workers, std::size_t high_water) : queues_(static_cast<std::size_t>(workers)), high_water_(high_water) {}

  /// Blocks while the pool is above its high-water mark.
  void push(const Task& t) {
    std::unique_lock lock(mu_);
    space_.wait(lock, [&] { return size_ < high_water_ || cancelled_; });
    if (cancelled_) return;
    queues_[next_].push_back(t);
    next_ = (next_ + 1) % queues_.size();
    ++size_;
    ++pushed_;
    ready_.notify_one();
  }

  /// Own deque from the back, else the front of the fullest other deque.
  /// Returns false once the producer is done and the pool is drained.
  bool pop(std::size_t self, Task& out) {
    std::unique_lock lock(mu_);
    ready_.wait(lock, [&] { return size_ > 0 || closed_ || cancelled_; });
    if (cancelled_ || size_ == 0) return false;
    auto& own = queues_[self];
    if (!own.empty()) {
      out = own.back();
      own.pop_back();
    } else {
      auto victim = std::max_element(queues_.begin(), queues_.end(),
                                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
      out = victim->front();
      victim->pop_front();
    }
    --size_;
    space_.notify_one();
    return true;
  }

  void close() {
    std::lock_guard lock(mu_);
    closed_ = true;
    ready_.notify_all();
  }

  void cancel() {
    std::lock_guard lock(mu_);
    cancelled_ = true;
    ready_.notify_all();
    space_.notify_all();
  }

  bool cancelled() {
    std::lock_guard lock(mu_);
    return cancelled_;
  }

  std::uint64_t pushed() {
    std::lock_guard lock(mu_);
    return pushed_;
  }

 private:
  std::mutex mu_;
  std::condition_variable ready_;
  std::condition_variable space_;
  std::vector<std::deque<Task>> queues_;
  std::size_t high_water_;
  std::size_t next_ = 0;
  std::size_t size_ = 0;
  std::uint64_t pushed_ = 0;
  bool closed_ = false;
  bool cancelled_ = false;
};

}  // namespace

ParallelOutcome execute_parallel(const Graph& g, const CompiledPlan& plan, int workers, int depth, bool listing,
                                 std::optional<std::chrono::steady_clock::time_point> deadline) {
  WorkPool pool(workers, static_cast<std::size_t>(4 * workers));
  std::vector<Executor> executors;
  executors.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    executors.emplace_back(g, plan, listing);
    executors.back().set_deadline(deadline);
  }

  std::mutex error_mu;
  std::exception_ptr error;
  auto fail = [&](std::exception_ptr e) {
    {
      std::lock_guard lock(error_mu);
      if (!error) error = e;
    }
    pool.cancel();
  };

  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      auto& exec = executors[static_cast<std::size_t>(w)];
      Task task;
      try {
        while (pool.pop(static_cast<std::size_t>(w), task)) {
          exec.run_prefix(std::span<const Vertex>(task.prefix.data(), static_cast<std::size_t>(depth)));
          if (exec.timed_out()) pool.cancel();
        }
      } catch (...) {
        fail(std::current_exception());
      }
    });
  }

  Executor producer(g, plan, false);
  producer.set_deadline(deadline);
  try {
    producer.enumerate_prefixes(depth, [&](std::span<const Vertex> prefix) {
      Task t;
      std::copy(prefix.begin(), prefix.end(), t.prefix.begin());
      pool.push(t);
    });
  } catch (...) {
    fail(std::current_exception());
  }
  pool.close();
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);

  ParallelOutcome out;
  out.tasks = pool.pushed();
  out.intersections = producer.intersections();
  out.timed_out = producer.timed_out();
  for (auto& exec : executors) {
    out.count += exec.count();
    out.iep_raw += exec.iep_raw();
    out.intersections += exec.intersections();
    out.timed_out = out.timed_out || exec.timed_out();
    if (listing) out.listing.insert(out.listing.end(), exec.listing().begin(), exec.listing().end());
  }
  return out;
}

}  // namespace detail

MatchResult run_parallel(const Graph& g, const Pattern& p, const Configuration& config, int workers,
                         int prefix_depth, bool iep) {
  if (workers < 1) throw UsageError("workers must be at least 1");
  if (prefix_depth < 1 || prefix_depth > p.size() - 1) {
    throw UsageError("prefix depth must be between 1 and " + std::to_string(p.size() - 1));
  }
  MatchOptions opts;
  opts.iep = iep;
  opts.workers = workers;
  opts.prefix_depth = prefix_depth;
  return match(g, p, config, opts);
}

}  // namespace gpm
