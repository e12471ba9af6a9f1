#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>

namespace tfsub {

/// Limits for the exact (exponential-time) solvers.
struct SearchBudget {
  std::uint64_t max_nodes = 10'000'000;
  std::chrono::duration<double> max_time{30.0};
  /// Exact solvers refuse larger inputs up front.
  std::size_t max_vertices = 256;
};

/// Counts search nodes against a SearchBudget and throws BudgetExceeded
/// once either limit is hit. The clock is polled every 1024 ticks.
class SearchMeter {
 public:
  explicit SearchMeter(const SearchBudget& budget);

  void tick();
  void check_size(std::size_t n, const char* what) const;

  std::uint64_t nodes() const noexcept { return nodes_; }
  const SearchBudget& budget() const noexcept { return budget_; }

 private:
  SearchBudget budget_;
  std::uint64_t nodes_ = 0;
  std::chrono::steady_clock::time_point deadline_;
};

}  // namespace tfsub
