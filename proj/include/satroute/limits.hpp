#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>

namespace satroute {

/// Bounds for the exact (exponential) solvers and the oracles. Inputs beyond
/// a bound are refused with BudgetExceeded, never truncated.
struct SearchLimits {
  std::int64_t max_steps = 20'000'000;   // search-tree nodes / path extensions
  int max_graph_nodes = 600;             // TVG nodes (I * K)
  int max_units = 20;                    // (model, client) pairs
  int max_contested_arcs = 20;           // multicast arcs that both models want
  std::int64_t max_vectors = 2'000'000;  // arrival vectors or client subsets
  std::int64_t max_paths = 200'000;      // enumerated paths per unit (oracles)
  double time_limit_seconds = 120.0;

  /// Parses "key=value,key=value" (keys: steps, nodes, units, contested,
  /// vectors, paths, seconds) on top of the defaults.
  static SearchLimits parse(std::string_view spec);
  /// Reads SATROUTE_BUDGET if set.
  static SearchLimits from_env();
};

/// Step counter with a wall-clock ceiling.
class Budget {
 public:
  explicit Budget(const SearchLimits& limits);

  /// Counts `n` steps; throws BudgetExceeded past the limit or deadline.
  void step(std::int64_t n = 1);
  std::int64_t steps() const { return steps_; }
  const SearchLimits& limits() const { return limits_; }

  void require(bool within, const std::string& what) const;

 private:
  SearchLimits limits_;
  std::int64_t steps_ = 0;
  std::chrono::steady_clock::time_point deadline_;
};

}  // namespace satroute
