#pragma once

#include <vector>

#include "tfsub/budget.hpp"
#include "tfsub/graph.hpp"

namespace tfsub {

bool is_triangle_free(const Graph& g);

/// Triangle-free, and every non-adjacent pair of distinct vertices has a
/// common neighbor. K_1 qualifies; two isolated vertices do not.
bool is_maximal_triangle_free(const Graph& g);

/// Exact chromatic number by DSATUR branch and bound. 0 for the empty graph.
int chromatic_number(const Graph& g, const SearchBudget& budget = {});

/// An optimal proper coloring (colors 0..chi-1), same search as chromatic_number.
std::vector<int> exact_coloring(const Graph& g, const SearchBudget& budget = {});

/// True iff `colors` is a proper coloring of g.
bool is_proper_coloring(const Graph& g, std::span<const int> colors);

int clique_number(const Graph& g, const SearchBudget& budget = {});

/// A maximum independent set; among those, the lexicographically least one.
VertexSet max_independent_set(const Graph& g, const SearchBudget& budget = {});

/// Size of a maximum independent set of g restricted to `candidates`.
std::size_t independence_number(const Graph& g, const VertexBits& candidates,
                                SearchMeter& meter);

/// Polynomial-time independent set of size >= floor(sqrt(n)) in a
/// triangle-free graph. Throws NotTriangleFree.
VertexSet sqrt_stable_set_triangle_free(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// new vertex id -> original vertex id
  std::vector<Vertex> to_host;
};

/// Subgraph induced on `s`, re-indexed in increasing vertex order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// 2|E|/n. Throws EmptyGraph for n = 0.
Rational average_degree(const Graph& g);

/// floor(sqrt(n)) computed exactly on integers.
std::size_t isqrt(std::size_t n);

}  // namespace tfsub
