#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace tfsub {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
using VertexBits = boost::dynamic_bitset<std::uint64_t>;

/// Undirected simple graph on the dense vertex range [0, n).
///
/// Keeps both sorted adjacency lists and an adjacency bit matrix, so neighbor
/// iteration and pair queries are cheap. Self-loops are rejected; adding an
/// existing edge is a no-op. Labels are carried for reports only.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  /// Builds a graph from an edge list. Throws OutOfRange / RangeError.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges);

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  /// Returns false if the edge was already present. Throws on loops / range.
  bool add_edge(Vertex u, Vertex v);

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  const VertexBits& row(Vertex v) const { return rows_[v]; }

  /// Closed neighborhood N[v] as a bitset.
  VertexBits closed_row(Vertex v) const;

  /// Every edge once, as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  std::size_t max_degree() const;
  std::size_t min_degree() const;

  void set_labels(std::vector<std::string> labels);
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_ == b.adj_;
  }

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> adj_;
  std::vector<VertexBits> rows_;
  std::size_t edge_count_ = 0;
  std::vector<std::string> labels_;
};

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> members);
  VertexSet(std::initializer_list<Vertex> members);
  static VertexSet from_bits(const VertexBits& bits);

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const;
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Vertex>& members() const noexcept { return members_; }

  VertexBits to_bits(std::size_t n) const;
  /// Throws OutOfRange if any member is >= n.
  void check_within(std::size_t n) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Exact non-negative rational, always stored reduced.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Rational make(std::uint64_t num, std::uint64_t den);
  double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// True iff `s` has no edge inside it.
bool is_stable(const Graph& g, std::span<const Vertex> s);

/// Relabels g so that old vertex v becomes perm[v].
Graph permute(const Graph& g, std::span<const Vertex> perm);

}  // namespace tfsub
