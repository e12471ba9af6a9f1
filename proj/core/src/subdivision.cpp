#include "tfsub/subdivision.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <set>

#include "tfsub/errors.hpp"

namespace tfsub {

VertexSet SubdivisionWitness::used_vertices() const {
  std::vector<Vertex> all = branch_map;
  for (const auto& p : paths) all.insert(all.end(), p.begin(), p.end());
  return VertexSet(std::move(all));
}

std::string to_string(WitnessDefect defect) {
  switch (defect) {
    case WitnessDefect::kNone: return "none";
    case WitnessDefect::kBranchMapSize: return "branch_map_size";
    case WitnessDefect::kBranchOutOfRange: return "branch_out_of_range";
    case WitnessDefect::kBranchNotInjective: return "branch_not_injective";
    case WitnessDefect::kPathCount: return "path_count";
    case WitnessDefect::kPathTooShort: return "path_too_short";
    case WitnessDefect::kPathEndpoints: return "path_endpoints";
    case WitnessDefect::kPathVertexOutOfRange: return "path_vertex_out_of_range";
    case WitnessDefect::kNonAdjacentStep: return "non_adjacent_step";
    case WitnessDefect::kPathsNotDisjoint: return "paths_not_disjoint";
    case WitnessDefect::kChord: return "chord";
  }
  return "unknown";
}

WitnessCheck verify_witness(const SubdivisionWitness& w, bool require_induced) {
  const std::size_t n = w.host.order();
  const auto pattern_edges = w.pattern.edges();
  if (w.branch_map.size() != w.pattern.order()) {
    return {WitnessDefect::kBranchMapSize, "branch map has " + std::to_string(w.branch_map.size()) +
                                               " entries for " + std::to_string(w.pattern.order()) +
                                               " pattern vertices"};
  }
  std::vector<int> role(n, 0);  // 0 unused, 1 branch, 2 interior
  for (std::size_t p = 0; p < w.branch_map.size(); ++p) {
    const Vertex b = w.branch_map[p];
    if (b >= n) return {WitnessDefect::kBranchOutOfRange, "branch image " + std::to_string(b) + " out of range"};
    if (role[b] != 0) {
      return {WitnessDefect::kBranchNotInjective, "host vertex " + std::to_string(b) + " is the image of two pattern vertices"};
    }
    role[b] = 1;
  }
  if (w.paths.size() != pattern_edges.size()) {
    return {WitnessDefect::kPathCount, std::to_string(w.paths.size()) + " paths for " +
                                           std::to_string(pattern_edges.size()) + " pattern edges"};
  }

  std::set<Edge> path_edges;
  for (std::size_t k = 0; k < w.paths.size(); ++k) {
    const auto& path = w.paths[k];
    const std::string tag = "path " + std::to_string(k);
    if (path.size() < 2) return {WitnessDefect::kPathTooShort, tag + " has fewer than two vertices"};
    for (Vertex v : path) {
      if (v >= n) return {WitnessDefect::kPathVertexOutOfRange, tag + " leaves the host"};
    }
    const auto [pu, pv] = pattern_edges[k];
    if (path.front() != w.branch_map[pu] || path.back() != w.branch_map[pv]) {
      return {WitnessDefect::kPathEndpoints, tag + " does not join the images of its pattern edge"};
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (!w.host.adjacent(path[i], path[i + 1])) {
        return {WitnessDefect::kNonAdjacentStep, tag + " steps across non-edge " +
                                                     std::to_string(path[i]) + "-" + std::to_string(path[i + 1])};
      }
      path_edges.emplace(std::min(path[i], path[i + 1]), std::max(path[i], path[i + 1]));
    }
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      if (role[path[i]] != 0) {
        return {WitnessDefect::kPathsNotDisjoint, tag + " reuses host vertex " + std::to_string(path[i])};
      }
      role[path[i]] = 2;
    }
  }

  if (require_induced) {
    std::vector<Vertex> used;
    for (Vertex v = 0; v < n; ++v)
      if (role[v] != 0) used.push_back(v);
    for (std::size_t i = 0; i < used.size(); ++i) {
      for (std::size_t j = i + 1; j < used.size(); ++j) {
        if (w.host.adjacent(used[i], used[j]) && !path_edges.contains({used[i], used[j]})) {
          return {WitnessDefect::kChord, "chord " + std::to_string(used[i]) + "-" + std::to_string(used[j])};
        }
      }
    }
  }
  return {};
}

namespace {

class SubdivisionSearch {
 public:
  SubdivisionSearch(const Graph& pattern, const Graph& host, bool induced, SearchMeter& meter)
      : pattern_(pattern), host_(host), induced_(induced), meter_(meter),
        pattern_edges_(pattern.edges()), order_(pattern.order()),
        image_(pattern.order(), kUnassigned), used_(host.order()),
        paths_(pattern_edges_.size()) {
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return pattern_.degree(a) > pattern_.degree(b);
    });
  }

  std::optional<SubdivisionWitness> run() {
    if (!assign(0)) return std::nullopt;
    return SubdivisionWitness{pattern_, host_, image_, paths_, induced_};
  }

 private:
  static constexpr Vertex kUnassigned = std::numeric_limits<Vertex>::max();

  bool assign(std::size_t k) {
    meter_.tick();
    if (k == order_.size()) return route_all();
    const Vertex u = order_[k];
    for (Vertex h = 0; h < host_.order(); ++h) {
      if (used_.test(h) || host_.degree(h) < pattern_.degree(u)) continue;
      if (induced_ && !compatible_branch(u, h, k)) continue;
      image_[u] = h;
      used_.set(h);
      if (assign(k + 1)) return true;
      used_.reset(h);
      image_[u] = kUnassigned;
    }
    return false;
  }

  // Induced mode: two branch images may only be adjacent along a pattern edge.
  bool compatible_branch(Vertex u, Vertex h, std::size_t k) const {
    for (std::size_t i = 0; i < k; ++i) {
      const Vertex other = order_[i];
      if (host_.adjacent(h, image_[other]) && !pattern_.adjacent(u, other)) return false;
    }
    return true;
  }

  std::size_t host_distance(Vertex a, Vertex b) const {
    std::vector<std::size_t> dist(host_.order(), std::numeric_limits<std::size_t>::max());
    std::deque<Vertex> queue{a};
    dist[a] = 0;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      if (v == b) return dist[v];
      for (Vertex w : host_.neighbors(v)) {
        if (dist[w] == std::numeric_limits<std::size_t>::max()) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
    return dist[b];
  }

  bool route_all() {
    std::vector<std::pair<std::size_t, std::size_t>> keyed;
    for (std::size_t e = 0; e < pattern_edges_.size(); ++e) {
      const auto [u, v] = pattern_edges_[e];
      keyed.emplace_back(host_distance(image_[u], image_[v]), e);
    }
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    edge_order_.clear();
    for (const auto& [dist, e] : keyed) {
      if (dist == std::numeric_limits<std::size_t>::max()) return false;
      edge_order_.push_back(e);
    }
    return route(0);
  }

  // Every unrouted edge still needs a connection through unused vertices.
  bool still_routable(std::size_t t) const {
    for (std::size_t s = t; s < edge_order_.size(); ++s) {
      const auto [u, v] = pattern_edges_[edge_order_[s]];
      const Vertex a = image_[u];
      const Vertex b = image_[v];
      if (host_.adjacent(a, b)) continue;
      VertexBits seen(host_.order());
      std::deque<Vertex> queue{a};
      seen.set(a);
      bool reached = false;
      while (!queue.empty() && !reached) {
        const Vertex x = queue.front();
        queue.pop_front();
        for (Vertex y : host_.neighbors(x)) {
          if (y == b) {
            reached = true;
            break;
          }
          if (!seen.test(y) && !used_.test(y)) {
            seen.set(y);
            queue.push_back(y);
          }
        }
      }
      if (!reached) return false;
    }
    return true;
  }

  bool route(std::size_t t) {
    meter_.tick();
    if (t == edge_order_.size()) return true;
    if (!still_routable(t)) return false;
    const std::size_t e = edge_order_[t];
    const auto [u, v] = pattern_edges_[e];
    const Vertex a = image_[u];
    const Vertex b = image_[v];

    // A direct edge is never worse than a longer path; in induced mode any
    // longer path would leave a-b as a chord.
    if (host_.adjacent(a, b)) {
      paths_[e] = {a, b};
      if (route(t + 1)) return true;
      paths_[e].clear();
      return false;
    }
    const std::size_t free = host_.order() - used_.count();
    Path path{a};
    for (std::size_t len = 2; len <= free + 1; ++len) {
      if (extend(t, e, b, len, path)) return true;
    }
    return false;
  }

  bool extend(std::size_t t, std::size_t e, Vertex b, std::size_t len, Path& path) {
    meter_.tick();
    const std::size_t steps_left = len - (path.size() - 1);
    const Vertex cur = path.back();
    if (steps_left == 1) {
      if (!host_.adjacent(cur, b)) return false;
      path.push_back(b);
      paths_[e] = path;
      if (route(t + 1)) return true;
      paths_[e].clear();
      path.pop_back();
      return false;
    }
    for (Vertex w : host_.neighbors(cur)) {
      if (used_.test(w)) continue;
      const bool touches_b = host_.adjacent(w, b);
      if (steps_left == 2 && !touches_b) continue;
      if (induced_) {
        if (touches_b && steps_left != 2) continue;
        VertexBits clash = host_.row(w) & used_;
        clash.reset(cur);
        clash.reset(b);
        if (clash.any()) continue;
      }
      used_.set(w);
      path.push_back(w);
      if (extend(t, e, b, len, path)) return true;
      path.pop_back();
      used_.reset(w);
    }
    return false;
  }

  const Graph& pattern_;
  const Graph& host_;
  bool induced_;
  SearchMeter& meter_;
  std::vector<Edge> pattern_edges_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  VertexBits used_;
  std::vector<Path> paths_;
  std::vector<std::size_t> edge_order_;
};

}  // namespace

std::optional<SubdivisionWitness> find_subdivision(const Graph& pattern, const Graph& host,
                                                   bool require_induced,
                                                   const SearchBudget& budget) {
  SearchMeter meter(budget);
  meter.check_size(host.order(), "find_subdivision");
  if (pattern.order() > host.order()) return std::nullopt;
  auto found = SubdivisionSearch(pattern, host, require_induced, meter).run();
  if (found) {
    if (auto check = verify_witness(*found, require_induced); !check) {
      throw Error("internal: subdivision search produced an invalid witness: " + check.detail);
    }
  }
  return found;
}

DerivedGraph derived_graph(std::span<const Vertex> x, const PairWitnesses& witnesses,
                           const VertexSet& y_prime) {
  DerivedGraph out{Graph(x.size()), std::vector<Vertex>(x.begin(), x.end())};
  std::set<Vertex> seen;
  for (const auto& [pair, y] : witnesses) {
    const auto [i, j] = pair;
    if (i >= j || j >= x.size()) {
      throw BadParameter("witness key (" + std::to_string(i) + "," + std::to_string(j) +
                         ") is not an ordered pair of positions");
    }
    if (!seen.insert(y).second) {
      throw InconsistentWitnesses("vertex " + std::to_string(y) + " witnesses more than one pair");
    }
  }
  for (Vertex y : y_prime) {
    if (!seen.contains(y)) throw BadParameter("vertex " + std::to_string(y) + " in Y' is not a witness");
  }
  for (const auto& [pair, y] : witnesses) {
    if (y_prime.contains(y)) {
      out.graph.add_edge(static_cast<Vertex>(pair.first), static_cast<Vertex>(pair.second));
    }
  }
  return out;
}

SubdivisionWitness lift_to_induced_subdivision(const Graph& g, std::span<const Vertex> x_sub,
                                               const PairWitnesses& witnesses, const Graph& sub,
                                               std::span<const std::size_t> mapping) {
  if (mapping.size() != sub.order()) throw BadParameter("mapping must cover every pattern vertex");
  std::set<std::size_t> positions;
  for (auto pos : mapping) {
    if (pos >= x_sub.size()) throw BadParameter("mapping position out of range");
    if (!positions.insert(pos).second) throw BadParameter("mapping is not injective");
  }
  for (Vertex x : x_sub) {
    if (x >= g.order()) throw OutOfRange("branch vertex " + std::to_string(x) + " outside host");
  }

  const auto sub_edges = sub.edges();
  std::vector<Vertex> used_y;
  used_y.reserve(sub_edges.size());
  for (const auto& [p, q] : sub_edges) {
    const auto i = std::min(mapping[p], mapping[q]);
    const auto j = std::max(mapping[p], mapping[q]);
    auto it = witnesses.find({i, j});
    if (it == witnesses.end()) {
      throw BadParameter("no witness for pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
    if (it->second >= g.order()) throw OutOfRange("witness vertex outside host");
    used_y.push_back(it->second);
  }

  if (!is_stable(g, x_sub)) throw PreconditionViolated('a', "branch set X' is not stable");
  {
    std::vector<Vertex> distinct = used_y;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (!is_stable(g, distinct)) throw PreconditionViolated('b', "witness set Y'' is not stable");
  }
  for (std::size_t k = 0; k < sub_edges.size(); ++k) {
    const auto [p, q] = sub_edges[k];
    const Vertex y = used_y[k];
    const Vertex xi = x_sub[mapping[p]];
    const Vertex xj = x_sub[mapping[q]];
    const std::string tag = "witness " + std::to_string(y);
    if (std::find(x_sub.begin(), x_sub.end(), y) != x_sub.end()) {
      throw PreconditionViolated('c', tag + " lies in the branch set");
    }
    if (!g.adjacent(y, xi) || !g.adjacent(y, xj)) {
      throw PreconditionViolated('c', tag + " misses one of its branch vertices");
    }
    for (Vertex x : x_sub) {
      if (x != xi && x != xj && g.adjacent(y, x)) {
        throw PreconditionViolated('c', tag + " is adjacent to a third branch vertex " + std::to_string(x));
      }
    }
    for (std::size_t other = 0; other < used_y.size(); ++other) {
      if (other != k && used_y[other] == y) {
        throw PreconditionViolated('c', tag + " serves two pattern edges");
      }
    }
  }

  SubdivisionWitness w{sub, g, {}, {}, true};
  for (auto pos : mapping) w.branch_map.push_back(x_sub[pos]);
  for (std::size_t k = 0; k < sub_edges.size(); ++k) {
    const auto [p, q] = sub_edges[k];
    w.paths.push_back({w.branch_map[p], used_y[k], w.branch_map[q]});
  }
  if (auto check = verify_witness(w, true); !check) {
    throw Error("internal: lifted witness failed verification: " + check.detail);
  }
  return w;
}

}  // namespace tfsub
