#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tfsub/budget.hpp"
#include "tfsub/generators.hpp"
#include "tfsub/graph.hpp"

namespace tfsub {

/// Ordered list of non-empty hyperedges over the ground set [0, n). The edge
/// order is the e_i indexing used by every search below.
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Throws BadParameter for empty edges, OutOfRange for bad members.
  Hypergraph(std::size_t n, std::vector<VertexSet> edges);

  std::size_t ground_size() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const VertexSet& edge(std::size_t i) const { return edges_[i]; }
  const std::vector<VertexSet>& edges() const noexcept { return edges_; }
  const VertexBits& edge_bits(std::size_t i) const { return bits_[i]; }

  /// Source vertex x_i of edge i when built from a graph.
  const std::vector<Vertex>& origin() const noexcept { return origin_; }
  void set_origin(std::vector<Vertex> origin);

 private:
  std::size_t n_ = 0;
  std::vector<VertexSet> edges_;
  std::vector<VertexBits> bits_;
  std::vector<Vertex> origin_;
};

/// One hyperedge N[v] per vertex, in vertex order. Throws EmptyGraph.
Hypergraph neighborhood_hypergraph(const Graph& g);

/// Maximum number of pairwise disjoint hyperedges.
std::size_t packing_number(const Hypergraph& h, const SearchBudget& budget = {});

struct Transversal {
  std::size_t size = 0;
  /// Lexicographically least minimum transversal.
  VertexSet witness;
};

Transversal transversality(const Hypergraph& h, const SearchBudget& budget = {});

/// True iff `t` meets every hyperedge.
bool is_transversal(const Hypergraph& h, const VertexSet& t);

/// 11 d^2 (d+4) (d+1)^2. Throws BadParameter for d = 0 or on 64-bit overflow.
std::uint64_t dsw_threshold(std::uint64_t d);

/// d chosen hyperedges with a private witness for each pair.
struct DswStructure {
  /// Strictly increasing hyperedge indices e_1..e_d.
  std::vector<std::size_t> edge_indices;
  /// Keyed by positions into edge_indices, i < j.
  PairWitnesses witnesses;

  std::size_t d() const noexcept { return edge_indices.size(); }
};

enum class DswDefect {
  kNone,
  kIndexOutOfRange,
  kDuplicateIndex,
  kMissingWitness,
  kExtraWitness,
  kWitnessOutOfRange,
  kWitnessNotInBoth,
  kWitnessNotPrivate,
};

struct DswCheck {
  DswDefect defect = DswDefect::kNone;
  std::string detail;
  explicit operator bool() const noexcept { return defect == DswDefect::kNone; }
};

/// Independent re-check of every DswStructure invariant.
DswCheck validate_dsw(const Hypergraph& h, const DswStructure& s);

/// First d-subset of hyperedges (lexicographic on index tuples) that admits
/// private witnesses for all pairs; witnesses are the smallest eligible
/// vertices. Requires d >= 2.
std::optional<DswStructure> find_dsw_structure(const Hypergraph& h, std::size_t d,
                                               const SearchBudget& budget = {});

/// Largest d admitting a structure. 0 for no edges, 1 if no pair qualifies.
std::size_t max_dsw_size(const Hypergraph& h, const SearchBudget& budget = {});

std::string to_string(DswDefect defect);

}  // namespace tfsub
