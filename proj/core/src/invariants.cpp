#include "tfsub/invariants.hpp"

#include <algorithm>

#include "tfsub/errors.hpp"

namespace tfsub {

bool is_triangle_free(const Graph& g) {
  for (const auto& [u, v] : g.edges()) {
    if (g.row(u).intersects(g.row(v))) return false;
  }
  return true;
}

bool is_maximal_triangle_free(const Graph& g) {
  if (!is_triangle_free(g)) return false;
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v) && !g.row(u).intersects(g.row(v))) return false;
    }
  }
  return true;
}

bool is_proper_coloring(const Graph& g, std::span<const int> colors) {
  if (colors.size() != g.order()) return false;
  for (const auto& [u, v] : g.edges()) {
    if (colors[u] == colors[v]) return false;
  }
  return true;
}

int chromatic_number(const Graph& g, const SearchBudget& budget) {
  const auto colors = exact_coloring(g, budget);
  if (colors.empty()) return 0;
  return *std::max_element(colors.begin(), colors.end()) + 1;
}

std::size_t isqrt(std::size_t n) {
  std::size_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

VertexSet sqrt_stable_set_triangle_free(const Graph& g) {
  if (!is_triangle_free(g)) throw NotTriangleFree("sqrt_stable_set requires a triangle-free graph");
  const std::size_t n = g.order();
  const std::size_t target = isqrt(n);
  if (n == 0) return {};

  // A neighborhood in a triangle-free graph is independent.
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) >= target) {
      auto nb = g.neighbors(v);
      return VertexSet(std::vector<Vertex>(nb.begin(), nb.begin() + static_cast<long>(target)));
    }
  }

  // Max degree < target here, so min-degree greedy yields >= n/target >= target.
  VertexBits alive(n);
  alive.set();
  std::vector<Vertex> picked;
  while (alive.any()) {
    Vertex best = 0;
    std::size_t best_deg = n + 1;
    for (auto i = alive.find_first(); i != VertexBits::npos; i = alive.find_next(i)) {
      const auto d = (g.row(static_cast<Vertex>(i)) & alive).count();
      if (d < best_deg) {
        best_deg = d;
        best = static_cast<Vertex>(i);
      }
    }
    picked.push_back(best);
    alive.reset(best);
    alive -= g.row(best);
  }
  return VertexSet(std::move(picked));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  s.check_within(g.order());
  InducedSubgraph out{Graph(s.size()), s.members()};
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.adjacent(s[i], s[j])) {
        out.graph.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  if (!g.labels().empty()) {
    std::vector<std::string> labels;
    for (Vertex v : s) labels.push_back(g.labels()[v]);
    out.graph.set_labels(std::move(labels));
  }
  return out;
}

Rational average_degree(const Graph& g) {
  if (g.order() == 0) throw EmptyGraph("average degree of the empty graph is undefined");
  return Rational::make(2 * g.size(), g.order());
}

}  // namespace tfsub
