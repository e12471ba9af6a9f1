#include <algorithm>
#include <numeric>

#include "tfsub/errors.hpp"
#include "tfsub/invariants.hpp"

namespace tfsub {
namespace {

// DSATUR branch and bound. Vertex priority: saturation, then degree
// (descending), then id. A new color is only ever opened as the next unused
// index, which removes color-permutation symmetry.
class DsaturSearch {
 public:
  DsaturSearch(const Graph& g, SearchMeter& meter)
      : g_(g), meter_(meter), n_(g.order()), color_(n_, -1), sat_(n_, 0),
        neighbor_color_count_(n_, std::vector<int>(n_ + 1, 0)) {}

  std::vector<int> solve() {
    if (n_ == 0) return {};
    lower_ = greedy_clique_size();
    best_ = greedy_dsatur();
    best_colors_ = color_;
    std::fill(color_.begin(), color_.end(), -1);
    std::fill(sat_.begin(), sat_.end(), 0);
    for (auto& c : neighbor_color_count_) std::fill(c.begin(), c.end(), 0);
    if (best_ > lower_) search(0, 0);
    return best_colors_;
  }

 private:
  int greedy_clique_size() const {
    std::vector<Vertex> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g_.degree(a) > g_.degree(b); });
    int best = 1;
    for (Vertex start : order) {
      VertexBits cand = g_.row(start);
      int size = 1;
      for (Vertex v : order) {
        if (cand.test(v)) {
          ++size;
          cand &= g_.row(v);
        }
      }
      best = std::max(best, size);
    }
    return best;
  }

  Vertex pick() const {
    Vertex best = 0;
    bool found = false;
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      if (!found || sat_[v] > sat_[best] ||
          (sat_[v] == sat_[best] && g_.degree(v) > g_.degree(best))) {
        best = v;
        found = true;
      }
    }
    return best;
  }

  void assign(Vertex v, int c) {
    color_[v] = c;
    for (Vertex w : g_.neighbors(v)) {
      if (neighbor_color_count_[w][c]++ == 0) ++sat_[w];
    }
  }

  void unassign(Vertex v) {
    const int c = color_[v];
    color_[v] = -1;
    for (Vertex w : g_.neighbors(v)) {
      if (--neighbor_color_count_[w][c] == 0) --sat_[w];
    }
  }

  int greedy_dsatur() {
    int used = 0;
    for (std::size_t k = 0; k < n_; ++k) {
      const Vertex v = pick();
      int c = 0;
      while (neighbor_color_count_[v][c] != 0) ++c;
      assign(v, c);
      used = std::max(used, c + 1);
    }
    return used;
  }

  void search(std::size_t colored, int used) {
    meter_.tick();
    if (best_ == lower_) return;
    if (colored == n_) {
      best_ = used;
      best_colors_ = color_;
      return;
    }
    const Vertex v = pick();
    if (sat_[v] >= best_) return;
    for (int c = 0; c < used; ++c) {
      if (neighbor_color_count_[v][c] != 0) continue;
      assign(v, c);
      search(colored + 1, used);
      unassign(v);
      if (best_ == lower_) return;
    }
    if (used + 1 < best_) {
      assign(v, used);
      search(colored + 1, used + 1);
      unassign(v);
    }
  }

  const Graph& g_;
  SearchMeter& meter_;
  std::size_t n_;
  std::vector<int> color_;
  std::vector<int> sat_;
  std::vector<std::vector<int>> neighbor_color_count_;
  int lower_ = 0;
  int best_ = 0;
  std::vector<int> best_colors_;
};

}  // namespace

std::vector<int> exact_coloring(const Graph& g, const SearchBudget& budget) {
  SearchMeter meter(budget);
  meter.check_size(g.order(), "chromatic_number");
  return DsaturSearch(g, meter).solve();
}

}  // namespace tfsub
