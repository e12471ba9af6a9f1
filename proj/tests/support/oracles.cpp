#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

namespace oracle {

bool triangle_free(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) return false;
  return true;
}

bool maximal_triangle_free(const Graph& g) {
  if (!triangle_free(g)) return false;
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (g.adjacent(a, b)) continue;
      bool common = false;
      for (Vertex c = 0; c < n && !common; ++c) common = g.adjacent(a, c) && g.adjacent(b, c);
      if (!common) return false;
    }
  }
  return true;
}

bool k_colorable(const Graph& g, int k) {
  const std::size_t n = g.order();
  if (n == 0) return true;
  if (k <= 0) return false;
  std::vector<int> c(n, 0);
  while (true) {
    bool ok = true;
    for (const auto& [u, v] : g.edges()) {
      if (c[u] == c[v]) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
    std::size_t i = 0;
    while (i < n && ++c[i] == k) c[i++] = 0;
    if (i == n) return false;
  }
}

int chromatic_number(const Graph& g) {
  int k = 0;
  while (!k_colorable(g, k)) ++k;
  return k;
}

bool independent(const Graph& g, const std::vector<Vertex>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) return false;
  return true;
}

namespace {

std::vector<Vertex> members(std::uint32_t mask) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < 32; ++v)
    if (mask >> v & 1U) out.push_back(v);
  return out;
}

}  // namespace

std::size_t independence_number(const Graph& g) {
  std::size_t best = 0;
  const std::uint32_t limit = 1U << g.order();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    const auto s = members(mask);
    if (s.size() > best && independent(g, s)) best = s.size();
  }
  return best;
}

std::size_t clique_number(const Graph& g) {
  std::size_t best = 0;
  const std::uint32_t limit = 1U << g.order();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    const auto s = members(mask);
    if (s.size() <= best) continue;
    bool clique = true;
    for (std::size_t i = 0; i < s.size() && clique; ++i)
      for (std::size_t j = i + 1; j < s.size() && clique; ++j) clique = g.adjacent(s[i], s[j]);
    if (clique) best = s.size();
  }
  return best;
}

std::size_t domination_number(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = n;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    const auto s = members(mask);
    if (s.size() >= best) continue;
    bool dominates = true;
    for (Vertex v = 0; v < n && dominates; ++v) {
      dominates = std::any_of(s.begin(), s.end(), [&](Vertex d) { return d == v || g.adjacent(d, v); });
    }
    if (dominates) best = s.size();
  }
  return best;
}

std::size_t transversality(const tfsub::Hypergraph& h) {
  const std::size_t n = h.ground_size();
  std::size_t best = n + 1;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    const auto s = members(mask);
    if (s.size() >= best) continue;
    bool hits = true;
    for (const auto& e : h.edges()) {
      hits = std::any_of(s.begin(), s.end(), [&](Vertex v) { return e.contains(v); });
      if (!hits) break;
    }
    if (hits) best = s.size();
  }
  return best;
}

namespace {

bool disjoint(const tfsub::VertexSet& a, const tfsub::VertexSet& b) {
  return std::none_of(a.begin(), a.end(), [&](Vertex v) { return b.contains(v); });
}

}  // namespace

std::size_t packing_number(const tfsub::Hypergraph& h) {
  const std::size_t m = h.edge_count();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    const auto s = members(mask);
    if (s.size() <= best) continue;
    bool ok = true;
    for (std::size_t i = 0; i < s.size() && ok; ++i)
      for (std::size_t j = i + 1; j < s.size() && ok; ++j) ok = disjoint(h.edge(s[i]), h.edge(s[j]));
    if (ok) best = s.size();
  }
  return best;
}

std::size_t max_dsw_size(const tfsub::Hypergraph& h) {
  const std::size_t m = h.edge_count();
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
    const auto s = members(mask);
    if (s.size() <= best) continue;
    bool ok = true;
    for (std::size_t i = 0; i < s.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < s.size() && ok; ++j) {
        bool witness = false;
        for (Vertex y = 0; y < h.ground_size() && !witness; ++y) {
          if (!h.edge(s[i]).contains(y) || !h.edge(s[j]).contains(y)) continue;
          witness = true;
          for (std::size_t k = 0; k < s.size(); ++k) {
            if (k != i && k != j && h.edge(s[k]).contains(y)) witness = false;
          }
        }
        ok = witness;
      }
    }
    if (ok) best = s.size();
  }
  return best;
}

std::size_t girth(const Graph& g) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (Vertex s = 0; s < g.order(); ++s) {
    std::vector<std::size_t> dist(g.order(), std::numeric_limits<std::size_t>::max());
    std::vector<Vertex> parent(g.order(), s);
    std::deque<Vertex> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] == std::numeric_limits<std::size_t>::max()) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          q.push_back(w);
        } else if (parent[v] != w) {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<Vertex> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const auto& [u, v] : a.edges()) {
      if (!b.adjacent(perm[u], perm[v])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

namespace {

using PathList = std::vector<std::vector<Vertex>>;

void all_paths(const Graph& g, Vertex cur, Vertex target, std::vector<Vertex>& path,
               std::vector<bool>& on, PathList& out) {
  if (cur == target) {
    out.push_back(path);
    return;
  }
  for (Vertex w : g.neighbors(cur)) {
    if (on[w]) continue;
    on[w] = true;
    path.push_back(w);
    all_paths(g, w, target, path, on, out);
    path.pop_back();
    on[w] = false;
  }
}

bool chordless(const Graph& host, const std::vector<Vertex>& branch, const std::vector<const std::vector<Vertex>*>& chosen) {
  std::set<Vertex> used(branch.begin(), branch.end());
  std::set<std::pair<Vertex, Vertex>> allowed;
  for (const auto* p : chosen) {
    used.insert(p->begin(), p->end());
    for (std::size_t i = 0; i + 1 < p->size(); ++i) {
      allowed.emplace(std::min((*p)[i], (*p)[i + 1]), std::max((*p)[i], (*p)[i + 1]));
    }
  }
  const std::vector<Vertex> u(used.begin(), used.end());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (host.adjacent(u[i], u[j]) && !allowed.contains({u[i], u[j]})) return false;
  return true;
}

}  // namespace

bool has_subdivision(const Graph& pattern, const Graph& host, bool induced) {
  const std::size_t p = pattern.order();
  const std::size_t n = host.order();
  if (p > n) return false;
  const auto edges = pattern.edges();

  // Every simple path between every ordered pair of host vertices.
  std::vector<std::vector<PathList>> paths(n, std::vector<PathList>(n));
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      if (a == b) continue;
      std::vector<Vertex> path{a};
      std::vector<bool> on(n, false);
      on[a] = true;
      all_paths(host, a, b, path, on, paths[a][b]);
    }
  }

  std::vector<Vertex> branch(p);
  std::vector<bool> taken(n, false);
  std::vector<const std::vector<Vertex>*> chosen(edges.size(), nullptr);
  std::vector<int> owner(n, -1);  // interior vertex -> edge index

  std::function<bool(std::size_t)> choose_paths = [&](std::size_t k) -> bool {
    if (k == edges.size()) return !induced || chordless(host, branch, chosen);
    const auto [u, v] = edges[k];
    for (const auto& path : paths[branch[u]][branch[v]]) {
      bool ok = true;
      for (std::size_t i = 1; i + 1 < path.size() && ok; ++i) ok = !taken[path[i]] && owner[path[i]] < 0;
      if (!ok) continue;
      for (std::size_t i = 1; i + 1 < path.size(); ++i) owner[path[i]] = static_cast<int>(k);
      chosen[k] = &path;
      if (choose_paths(k + 1)) return true;
      for (std::size_t i = 1; i + 1 < path.size(); ++i) owner[path[i]] = -1;
    }
    return false;
  };

  std::function<bool(std::size_t)> choose_branch = [&](std::size_t k) -> bool {
    if (k == p) return choose_paths(0);
    for (Vertex h = 0; h < n; ++h) {
      if (taken[h]) continue;
      taken[h] = true;
      branch[k] = h;
      if (choose_branch(k + 1)) return true;
      taken[h] = false;
    }
    return false;
  };
  return choose_branch(0);
}

}  // namespace oracle
