#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tfsub/budget.hpp"
#include "tfsub/generators.hpp"
#include "tfsub/graph.hpp"

namespace tfsub {

using Path = std::vector<Vertex>;

/// A (possibly induced) subdivision of `pattern` inside `host`.
///
/// paths[k] realizes pattern.edges()[k] = (u, v) with u < v and runs from
/// branch_map[u] to branch_map[v]. A path of two vertices is an unsubdivided
/// edge.
struct SubdivisionWitness {
  Graph pattern;
  Graph host;
  std::vector<Vertex> branch_map;
  std::vector<Path> paths;
  bool induced = false;

  /// Branch images plus all path vertices, sorted.
  VertexSet used_vertices() const;
};

enum class WitnessDefect {
  kNone,
  kBranchMapSize,
  kBranchOutOfRange,
  kBranchNotInjective,
  kPathCount,
  kPathTooShort,
  kPathEndpoints,
  kPathVertexOutOfRange,
  kNonAdjacentStep,
  kPathsNotDisjoint,
  kChord,
};

struct WitnessCheck {
  WitnessDefect defect = WitnessDefect::kNone;
  std::string detail;
  explicit operator bool() const noexcept { return defect == WitnessDefect::kNone; }
};

std::string to_string(WitnessDefect defect);

/// Polynomial-time check of every witness invariant; with `require_induced`
/// the host must induce exactly the path edges on the used vertices.
WitnessCheck verify_witness(const SubdivisionWitness& w, bool require_induced);

/// Exact backtracking search for a subdivision of `pattern` in `host`.
///
/// Branch vertices are assigned first (pattern vertices by decreasing degree,
/// host candidates by increasing id, host degree >= pattern degree), then the
/// pattern edges are routed one at a time over internally disjoint paths,
/// shortest paths first. Returns the first witness in this order, or nullopt
/// after an exhaustive search. Throws BudgetExceeded.
std::optional<SubdivisionWitness> find_subdivision(const Graph& pattern, const Graph& host,
                                                   bool require_induced,
                                                   const SearchBudget& budget = {});

struct DerivedGraph {
  Graph graph;
  /// Vertex i of the derived graph is position i of the branch sequence.
  std::vector<Vertex> to_host;
};

/// Graph on the positions of `x` with edge {i, j} iff witnesses[(i, j)] is in
/// y_prime. Throws InconsistentWitnesses if one vertex witnesses two pairs.
DerivedGraph derived_graph(std::span<const Vertex> x, const PairWitnesses& witnesses,
                           const VertexSet& y_prime);

/// Realizes `sub` (a graph on pattern vertices, mapping[p] = position in
/// x_sub) as an induced 1-subdivision in g: every edge {p, q} becomes
/// x_{mapping[p]} - y - x_{mapping[q]}. Checks the three lifting
/// preconditions (throws PreconditionViolated) and re-verifies the result.
SubdivisionWitness lift_to_induced_subdivision(const Graph& g, std::span<const Vertex> x_sub,
                                               const PairWitnesses& witnesses, const Graph& sub,
                                               std::span<const std::size_t> mapping);

}  // namespace tfsub
