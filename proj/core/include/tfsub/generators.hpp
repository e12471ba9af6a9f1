#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "tfsub/graph.hpp"

namespace tfsub {

/// Unordered pair of positions (i < j) into an ordered branch sequence.
using PositionPair = std::pair<std::size_t, std::size_t>;

/// Maps a position pair (i, j) to the vertex y_{i,j} adjacent to x_i and x_j.
using PairWitnesses = std::map<PositionPair, Vertex>;

Graph gen_cycle(std::size_t n);
Graph gen_path(std::size_t n);
Graph gen_complete(std::size_t n);
Graph gen_complete_bipartite(std::size_t a, std::size_t b);
Graph gen_star(std::size_t leaves);
Graph gen_empty(std::size_t n);

/// Outer cycle 0..4, spokes i-(i+5), inner pentagram on 5..9.
Graph gen_petersen();

/// Vertices are the k-subsets of [n] in lexicographic order; edges join
/// disjoint subsets. Requires k >= 1 and n >= 2k.
Graph gen_kneser(std::size_t n, std::size_t k);

/// V, then the shadow copies V', then the apex z.
Graph gen_mycielski(const Graph& g);

/// Replaces vertex i of C_5 by an independent set of size sizes[i]; consecutive
/// classes are completely joined. Always maximal triangle-free.
Graph gen_c5_blowup(const std::vector<std::size_t>& sizes);

/// Random maximal triangle-free graph by saturation over a seeded shuffle of
/// the non-edges. Deterministic in (n, seed).
Graph gen_random_mtf(std::size_t n, std::uint64_t seed);

/// Random triangle-free graph: up to `attempts` random pairs are tried and
/// kept when they do not close a triangle. Not necessarily maximal.
Graph gen_random_triangle_free(std::size_t n, std::size_t attempts, std::uint64_t seed);

/// Erdos-Renyi G(n, p) with p = num/den.
Graph gen_gnp(std::size_t n, std::uint32_t num, std::uint32_t den, std::uint64_t seed);

struct SyntheticDswSpec {
  std::size_t d = 2;
  /// Pairs {i, j} of X positions that receive a witness y_{i,j}.
  std::vector<PositionPair> pattern_edges;
  /// Extend to a maximal triangle-free host without touching X ∪ Y.
  bool pad = false;
  std::uint64_t seed = 0;

  static SyntheticDswSpec all_pairs(std::size_t d, bool pad = false, std::uint64_t seed = 0);
};

struct SyntheticDsw {
  Graph graph;
  /// x_i is vertex x[i]; X occupies ids 0..d-1.
  std::vector<Vertex> x;
  PairWitnesses witnesses;
};

/// Stable X, stable Y, each y_{i,j} adjacent to exactly x_i, x_j in X ∪ Y.
/// With padding the result is maximal triangle-free and X ∪ Y still induces
/// the 1-subdivision of the pattern-edge graph.
SyntheticDsw gen_synthetic_dsw(const SyntheticDswSpec& spec);

/// Portable seeded shuffle (same sequence on every standard library).
class Shuffler {
 public:
  explicit Shuffler(std::uint64_t seed);
  std::uint64_t below(std::uint64_t bound);
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace tfsub
