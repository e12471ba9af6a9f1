#include <algorithm>

#include "tfsub/errors.hpp"
#include "tfsub/invariants.hpp"

namespace tfsub {
namespace {

// Maximum independent set size over an explicit adjacency matrix.
// Degree-0 and degree-1 vertices are taken greedily (always safe for the
// size); otherwise branch on a maximum-degree vertex. A greedy clique cover of
// the candidates bounds the achievable size.
class MisSizeSearch {
 public:
  MisSizeSearch(const std::vector<VertexBits>& rows, SearchMeter& meter)
      : rows_(rows), meter_(meter) {}

  std::size_t solve(const VertexBits& cand) {
    best_ = 0;
    search(cand, 0);
    return best_;
  }

 private:
  std::size_t clique_cover(VertexBits rem) const {
    std::size_t cliques = 0;
    while (rem.any()) {
      const auto v = rem.find_first();
      VertexBits common = rows_[v] & rem;
      rem.reset(v);
      for (auto w = common.find_first(); w != VertexBits::npos; w = common.find_next(w)) {
        common &= rows_[w];
        rem.reset(w);
      }
      ++cliques;
    }
    return cliques;
  }

  void search(VertexBits cand, std::size_t taken) {
    meter_.tick();
    bool reduced = true;
    while (reduced) {
      reduced = false;
      for (auto v = cand.find_first(); v != VertexBits::npos; v = cand.find_next(v)) {
        const VertexBits nb = rows_[v] & cand;
        const auto deg = nb.count();
        if (deg <= 1) {
          ++taken;
          cand.reset(v);
          cand -= nb;
          reduced = true;
        }
      }
    }
    if (cand.none()) {
      best_ = std::max(best_, taken);
      return;
    }
    if (taken + clique_cover(cand) <= best_) return;

    std::size_t pivot = cand.find_first();
    std::size_t pivot_deg = 0;
    for (auto v = cand.find_first(); v != VertexBits::npos; v = cand.find_next(v)) {
      const auto deg = (rows_[v] & cand).count();
      if (deg > pivot_deg) {
        pivot_deg = deg;
        pivot = v;
      }
    }
    VertexBits with = cand;
    with.reset(pivot);
    with -= rows_[pivot];
    search(with, taken + 1);
    cand.reset(pivot);
    search(cand, taken);
  }

  const std::vector<VertexBits>& rows_;
  SearchMeter& meter_;
  std::size_t best_ = 0;
};

std::vector<VertexBits> adjacency_rows(const Graph& g) {
  std::vector<VertexBits> rows;
  rows.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) rows.push_back(g.row(v));
  return rows;
}

std::vector<VertexBits> complement_rows(const Graph& g) {
  std::vector<VertexBits> rows;
  rows.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexBits r = ~g.row(v);
    r.reset(v);
    rows.push_back(std::move(r));
  }
  return rows;
}

// Lexicographically least maximum independent set: fix the vertices in
// increasing order, keeping v whenever a maximum set through the prefix + v
// still exists.
VertexSet lex_least_mis(const std::vector<VertexBits>& rows, SearchMeter& meter) {
  const std::size_t n = rows.size();
  VertexBits cand(n);
  cand.set();
  MisSizeSearch solver(rows, meter);
  std::size_t need = solver.solve(cand);
  std::vector<Vertex> picked;
  for (std::size_t v = 0; v < n && need > 0; ++v) {
    if (!cand.test(v)) continue;
    cand.reset(v);
    VertexBits rest = cand - rows[v];
    if (1 + solver.solve(rest) >= need) {
      picked.push_back(static_cast<Vertex>(v));
      cand = std::move(rest);
      --need;
    }
  }
  return VertexSet(std::move(picked));
}

}  // namespace

std::size_t independence_number(const Graph& g, const VertexBits& candidates,
                                SearchMeter& meter) {
  const auto rows = adjacency_rows(g);
  return MisSizeSearch(rows, meter).solve(candidates);
}

VertexSet max_independent_set(const Graph& g, const SearchBudget& budget) {
  SearchMeter meter(budget);
  meter.check_size(g.order(), "max_independent_set");
  return lex_least_mis(adjacency_rows(g), meter);
}

int clique_number(const Graph& g, const SearchBudget& budget) {
  SearchMeter meter(budget);
  meter.check_size(g.order(), "clique_number");
  if (g.order() == 0) return 0;
  const auto rows = complement_rows(g);
  VertexBits all(g.order());
  all.set();
  return static_cast<int>(MisSizeSearch(rows, meter).solve(all));
}

}  // namespace tfsub
