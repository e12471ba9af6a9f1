#include "tfsub/graph.hpp"

#include <algorithm>
#include <numeric>

#include "tfsub/errors.hpp"

namespace tfsub {

Graph::Graph(std::size_t n) : adj_(n), rows_(n, VertexBits(n)) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_edges(std::size_t n, std::initializer_list<Edge> edges) {
  return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

void Graph::check_vertex(Vertex v) const {
  if (v >= order()) {
    throw OutOfRange("vertex " + std::to_string(v) + " outside [0, " +
                     std::to_string(order()) + ")");
  }
}

bool Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw RangeError("self-loop at vertex " + std::to_string(u));
  if (rows_[u].test(v)) return false;
  rows_[u].set(v);
  rows_[v].set(u);
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++edge_count_;
  return true;
}

VertexBits Graph::closed_row(Vertex v) const {
  VertexBits r = rows_[v];
  r.set(v);
  return r;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& a : adj_) best = std::max(best, a.size());
  return best;
}

std::size_t Graph::min_degree() const {
  if (adj_.empty()) return 0;
  std::size_t best = adj_.front().size();
  for (const auto& a : adj_) best = std::min(best, a.size());
  return best;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != order()) {
    throw BadParameter("label count " + std::to_string(labels.size()) +
                       " does not match vertex count " + std::to_string(order()));
  }
  labels_ = std::move(labels);
}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet VertexSet::from_bits(const VertexBits& bits) {
  std::vector<Vertex> out;
  out.reserve(bits.count());
  for (auto i = bits.find_first(); i != VertexBits::npos; i = bits.find_next(i)) {
    out.push_back(static_cast<Vertex>(i));
  }
  VertexSet s;
  s.members_ = std::move(out);
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexBits VertexSet::to_bits(std::size_t n) const {
  check_within(n);
  VertexBits bits(n);
  for (Vertex v : members_) bits.set(v);
  return bits;
}

void VertexSet::check_within(std::size_t n) const {
  if (!members_.empty() && members_.back() >= n) {
    throw OutOfRange("vertex " + std::to_string(members_.back()) + " outside [0, " +
                     std::to_string(n) + ")");
  }
}

Rational Rational::make(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw BadParameter("zero denominator");
  const auto d = std::gcd(num, den);
  return Rational{num / d, den / d};
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

bool is_stable(const Graph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] == s[j] || g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

Graph permute(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw BadParameter("permutation size mismatch");
  Graph out(g.order());
  for (const auto& [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

}  // namespace tfsub
