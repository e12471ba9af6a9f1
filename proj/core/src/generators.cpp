#include "tfsub/generators.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "tfsub/errors.hpp"
#include "tfsub/invariants.hpp"

namespace tfsub {

Shuffler::Shuffler(std::uint64_t seed) : engine_(seed) {}

std::uint64_t Shuffler::below(std::uint64_t bound) {
  if (bound == 0) throw BadParameter("Shuffler::below(0)");
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

Graph gen_cycle(std::size_t n) {
  if (n < 3) throw BadParameter("cycle needs n >= 3, got " + std::to_string(n));
  Graph g(n);
  for (Vertex i = 0; i < n; ++i) g.add_edge(i, static_cast<Vertex>((i + 1) % n));
  return g;
}

Graph gen_path(std::size_t n) {
  Graph g(n);
  for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph gen_complete(std::size_t n) {
  Graph g(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph gen_complete_bipartite(std::size_t a, std::size_t b) {
  Graph g(a + b);
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) g.add_edge(i, static_cast<Vertex>(a + j));
  return g;
}

Graph gen_star(std::size_t leaves) { return gen_complete_bipartite(1, leaves); }

Graph gen_empty(std::size_t n) { return Graph(n); }

Graph gen_petersen() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, 5 + (i + 2) % 5);
  }
  return g;
}

Graph gen_kneser(std::size_t n, std::size_t k) {
  if (k == 0 || n < 2 * k) {
    throw BadParameter("kneser needs k >= 1 and n >= 2k, got n=" + std::to_string(n) +
                       " k=" + std::to_string(k));
  }
  if (n > 64) throw BadParameter("kneser ground set limited to 64 elements");
  std::vector<std::uint64_t> subsets;
  std::vector<std::size_t> comb(k);
  for (std::size_t i = 0; i < k; ++i) comb[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (auto c : comb) mask |= std::uint64_t{1} << c;
    subsets.push_back(mask);
    if (subsets.size() > 4096) throw BadParameter("kneser graph too large");
    std::size_t i = k;
    while (i > 0 && comb[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++comb[i - 1];
    for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
  Graph g(subsets.size());
  for (Vertex a = 0; a < subsets.size(); ++a)
    for (Vertex b = a + 1; b < subsets.size(); ++b)
      if ((subsets[a] & subsets[b]) == 0) g.add_edge(a, b);
  return g;
}

Graph gen_mycielski(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  Graph m(2 * n + 1);
  const Vertex apex = 2 * n;
  for (const auto& [u, v] : g.edges()) {
    m.add_edge(u, v);
    m.add_edge(n + u, v);
    m.add_edge(u, n + v);
  }
  for (Vertex u = 0; u < n; ++u) m.add_edge(n + u, apex);
  return m;
}

Graph gen_c5_blowup(const std::vector<std::size_t>& sizes) {
  if (sizes.size() != 5) throw BadParameter("C5 blow-up needs exactly 5 class sizes");
  std::vector<std::vector<Vertex>> classes(5);
  Vertex next = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    if (sizes[i] == 0) throw BadParameter("C5 blow-up class sizes must be positive");
    for (std::size_t j = 0; j < sizes[i]; ++j) classes[i].push_back(next++);
  }
  Graph g(next);
  for (std::size_t i = 0; i < 5; ++i)
    for (Vertex a : classes[i])
      for (Vertex b : classes[(i + 1) % 5]) g.add_edge(a, b);
  return g;
}

namespace {

bool closes_triangle(const Graph& g, Vertex u, Vertex v) {
  return g.row(u).intersects(g.row(v));
}

// Adds every non-edge in `pairs` that keeps g triangle-free, in order, until a
// full pass adds nothing.
void saturate(Graph& g, const std::vector<Edge>& pairs) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [u, v] : pairs) {
      if (!g.adjacent(u, v) && !closes_triangle(g, u, v)) {
        g.add_edge(u, v);
        changed = true;
      }
    }
  }
}

}  // namespace

Graph gen_random_mtf(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw BadParameter("random-mtf needs n >= 1");
  Graph g(n);
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  Shuffler rng(seed);
  rng.shuffle(pairs);
  saturate(g, pairs);
  return g;
}

Graph gen_random_triangle_free(std::size_t n, std::size_t attempts, std::uint64_t seed) {
  Graph g(n);
  if (n < 2) return g;
  Shuffler rng(seed);
  for (std::size_t t = 0; t < attempts; ++t) {
    const auto u = static_cast<Vertex>(rng.below(n));
    const auto v = static_cast<Vertex>(rng.below(n));
    if (u == v || g.adjacent(u, v) || closes_triangle(g, u, v)) continue;
    g.add_edge(u, v);
  }
  return g;
}

Graph gen_gnp(std::size_t n, std::uint32_t num, std::uint32_t den, std::uint64_t seed) {
  if (den == 0 || num > den) throw BadParameter("edge probability must be in [0, 1]");
  Graph g(n);
  Shuffler rng(seed);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.below(den) < num) g.add_edge(u, v);
  return g;
}

SyntheticDswSpec SyntheticDswSpec::all_pairs(std::size_t d, bool pad, std::uint64_t seed) {
  SyntheticDswSpec spec;
  spec.d = d;
  spec.pad = pad;
  spec.seed = seed;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) spec.pattern_edges.emplace_back(i, j);
  return spec;
}

SyntheticDsw gen_synthetic_dsw(const SyntheticDswSpec& spec) {
  const std::size_t d = spec.d;
  if (d < 2) throw BadParameter("synthetic DSW needs d >= 2");
  std::set<PositionPair> pairs;
  for (auto [i, j] : spec.pattern_edges) {
    if (i == j) throw BadParameter("pattern edge (" + std::to_string(i) + "," + std::to_string(i) + ") is a loop");
    if (i >= d || j >= d) throw BadParameter("pattern edge position out of range");
    if (i > j) std::swap(i, j);
    if (!pairs.emplace(i, j).second) throw BadParameter("duplicate pattern edge");
  }

  const std::size_t core = d + pairs.size();
  std::vector<std::vector<Vertex>> padding;  // neighborhoods of padding vertices within X ∪ Y
  if (spec.pad) {
    std::vector<Vertex> all_y;
    for (std::size_t k = 0; k < pairs.size(); ++k) all_y.push_back(static_cast<Vertex>(d + k));
    if (all_y.size() >= 2) padding.push_back(all_y);
    for (std::size_t k = 0; k < d; ++k) {
      std::vector<Vertex> nb{static_cast<Vertex>(k)};
      std::size_t idx = 0;
      for (const auto& [i, j] : pairs) {
        if (i != k && j != k) nb.push_back(static_cast<Vertex>(d + idx));
        ++idx;
      }
      if (nb.size() > 1) padding.push_back(std::move(nb));
    }
    if (pairs.size() < d * (d - 1) / 2) {
      std::vector<Vertex> all_x;
      for (std::size_t k = 0; k < d; ++k) all_x.push_back(static_cast<Vertex>(k));
      padding.push_back(std::move(all_x));
    }
  }

  SyntheticDsw out{Graph(core + padding.size()), {}, {}};
  for (std::size_t k = 0; k < d; ++k) out.x.push_back(static_cast<Vertex>(k));
  Vertex y = static_cast<Vertex>(d);
  for (const auto& [i, j] : pairs) {
    out.graph.add_edge(static_cast<Vertex>(i), y);
    out.graph.add_edge(static_cast<Vertex>(j), y);
    out.witnesses.emplace(PositionPair{i, j}, y);
    ++y;
  }
  if (spec.pad) {
    for (std::size_t p = 0; p < padding.size(); ++p) {
      for (Vertex v : padding[p]) out.graph.add_edge(static_cast<Vertex>(core + p), v);
    }
    // Only pairs touching a padding vertex may gain edges.
    std::vector<Edge> free_pairs;
    const auto n = static_cast<Vertex>(out.graph.order());
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = std::max<Vertex>(u + 1, static_cast<Vertex>(core)); v < n; ++v)
        free_pairs.emplace_back(u, v);
    Shuffler rng(spec.seed);
    rng.shuffle(free_pairs);
    saturate(out.graph, free_pairs);
    if (!is_maximal_triangle_free(out.graph)) {
      throw BadParameter("padding could not complete the configuration to a maximal triangle-free host");
    }
  }
  return out;
}

}  // namespace tfsub
