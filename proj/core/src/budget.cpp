#include "tfsub/budget.hpp"

#include <string>

#include "tfsub/errors.hpp"

namespace tfsub {

SearchMeter::SearchMeter(const SearchBudget& budget)
    : budget_(budget),
      deadline_(std::chrono::steady_clock::now() +
                std::chrono::duration_cast<std::chrono::steady_clock::duration>(budget.max_time)) {}

void SearchMeter::tick() {
  ++nodes_;
  if (nodes_ > budget_.max_nodes) {
    throw BudgetExceeded("search node budget of " + std::to_string(budget_.max_nodes) +
                         " exhausted");
  }
  if ((nodes_ & 1023U) == 0 && std::chrono::steady_clock::now() > deadline_) {
    throw BudgetExceeded("search time budget exhausted");
  }
}

void SearchMeter::check_size(std::size_t n, const char* what) const {
  if (n > budget_.max_vertices) {
    throw BudgetExceeded(std::string(what) + ": instance of size " + std::to_string(n) +
                         " exceeds the exact-solver limit of " +
                         std::to_string(budget_.max_vertices));
  }
}

}  // namespace tfsub
