#include "tfsub/hypergraph.hpp"

#include <algorithm>
#include <limits>

#include "tfsub/errors.hpp"
#include "tfsub/invariants.hpp"

namespace tfsub {

Hypergraph::Hypergraph(std::size_t n, std::vector<VertexSet> edges)
    : n_(n), edges_(std::move(edges)) {
  bits_.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].empty()) throw BadParameter("hyperedge " + std::to_string(i) + " is empty");
    bits_.push_back(edges_[i].to_bits(n_));
  }
}

void Hypergraph::set_origin(std::vector<Vertex> origin) {
  if (!origin.empty() && origin.size() != edges_.size()) {
    throw BadParameter("origin map must have one entry per hyperedge");
  }
  origin_ = std::move(origin);
}

Hypergraph neighborhood_hypergraph(const Graph& g) {
  if (g.order() == 0) throw EmptyGraph("neighborhood hypergraph of the empty graph");
  std::vector<VertexSet> edges;
  std::vector<Vertex> origin;
  for (Vertex v = 0; v < g.order(); ++v) {
    edges.push_back(VertexSet::from_bits(g.closed_row(v)));
    origin.push_back(v);
  }
  Hypergraph h(g.order(), std::move(edges));
  h.set_origin(std::move(origin));
  return h;
}

std::size_t packing_number(const Hypergraph& h, const SearchBudget& budget) {
  SearchMeter meter(budget);
  meter.check_size(h.edge_count(), "packing_number");
  const std::size_t m = h.edge_count();
  Graph overlap(m);
  for (Vertex i = 0; i < m; ++i)
    for (Vertex j = i + 1; j < m; ++j)
      if (h.edge_bits(i).intersects(h.edge_bits(j))) overlap.add_edge(i, j);
  VertexBits all(m);
  all.set();
  return independence_number(overlap, all, meter);
}

namespace {

// Set-cover style decision search: can the edges in `remaining` be hit with at
// most k vertices drawn from `allowed`?
class HittingSearch {
 public:
  HittingSearch(const Hypergraph& h, SearchMeter& meter) : h_(h), meter_(meter) {}

  bool feasible(const std::vector<std::size_t>& remaining, VertexBits allowed, std::size_t k) {
    meter_.tick();
    if (remaining.empty()) return true;
    if (k == 0) return false;

    std::size_t branch_edge = remaining.front();
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    std::vector<std::pair<std::size_t, std::size_t>> by_size;
    by_size.reserve(remaining.size());
    for (auto e : remaining) {
      const auto c = (h_.edge_bits(e) & allowed).count();
      if (c == 0) return false;
      by_size.emplace_back(c, e);
      if (c < fewest) {
        fewest = c;
        branch_edge = e;
      }
    }
    // Pairwise disjoint edges need distinct vertices.
    std::sort(by_size.begin(), by_size.end());
    VertexBits used(h_.ground_size());
    std::size_t disjoint = 0;
    for (const auto& [c, e] : by_size) {
      const VertexBits part = h_.edge_bits(e) & allowed;
      if (!part.intersects(used)) {
        used |= part;
        if (++disjoint > k) return false;
      }
    }

    const VertexBits options = h_.edge_bits(branch_edge) & allowed;
    for (auto v = options.find_first(); v != VertexBits::npos; v = options.find_next(v)) {
      std::vector<std::size_t> rest;
      for (auto e : remaining)
        if (!h_.edge_bits(e).test(v)) rest.push_back(e);
      allowed.reset(v);
      if (feasible(rest, allowed, k - 1)) return true;
    }
    return false;
  }

 private:
  const Hypergraph& h_;
  SearchMeter& meter_;
};

}  // namespace

Transversal transversality(const Hypergraph& h, const SearchBudget& budget) {
  SearchMeter meter(budget);
  meter.check_size(h.ground_size(), "transversality");
  Transversal out;
  if (h.edge_count() == 0) return out;

  HittingSearch search(h, meter);
  std::vector<std::size_t> all_edges(h.edge_count());
  for (std::size_t i = 0; i < all_edges.size(); ++i) all_edges[i] = i;
  VertexBits allowed(h.ground_size());
  allowed.set();

  std::size_t tau = 1;
  while (!search.feasible(all_edges, allowed, tau)) ++tau;
  out.size = tau;

  // Lexicographically least witness of size tau.
  std::vector<Vertex> picked;
  std::vector<std::size_t> remaining = all_edges;
  std::size_t need = tau;
  for (Vertex v = 0; v < h.ground_size() && !remaining.empty(); ++v) {
    allowed.reset(v);
    std::vector<std::size_t> rest;
    for (auto e : remaining)
      if (!h.edge_bits(e).test(v)) rest.push_back(e);
    if (rest.size() == remaining.size()) continue;
    if (search.feasible(rest, allowed, need - 1)) {
      picked.push_back(v);
      remaining = std::move(rest);
      --need;
    }
  }
  out.witness = VertexSet(std::move(picked));
  return out;
}

bool is_transversal(const Hypergraph& h, const VertexSet& t) {
  for (const auto& e : h.edges()) {
    const bool hit = std::any_of(t.begin(), t.end(), [&](Vertex v) { return e.contains(v); });
    if (!hit) return false;
  }
  return true;
}

std::uint64_t dsw_threshold(std::uint64_t d) {
  if (d == 0) throw BadParameter("dsw_threshold needs d >= 1");
  std::uint64_t result = 11;
  const std::uint64_t factors[] = {d, d, d + 4, d + 1, d + 1};
  for (auto f : factors) {
    if (f != 0 && result > std::numeric_limits<std::uint64_t>::max() / f) {
      throw BadParameter("dsw_threshold(" + std::to_string(d) + ") overflows 64 bits");
    }
    result *= f;
  }
  return result;
}

namespace {

// Backtracking over increasing index tuples. A vertex is a private witness for
// a chosen pair exactly when it lies in precisely two chosen edges, so the
// search tracks the vertices covered at least once, twice and three times.
// Adding an edge only shrinks witness sets, so a dead pair stays dead.
class DswSearch {
 public:
  DswSearch(const Hypergraph& h, SearchMeter& meter) : h_(h), meter_(meter) {}

  struct Cover {
    VertexBits once, twice, thrice;
  };

  Cover empty_cover() const {
    const auto n = h_.ground_size();
    return {VertexBits(n), VertexBits(n), VertexBits(n)};
  }

  Cover add(const Cover& c, std::size_t e) const {
    const auto& bits = h_.edge_bits(e);
    Cover next = c;
    next.thrice |= c.twice & bits;
    next.twice |= c.once & bits;
    next.once |= bits;
    return next;
  }

  bool pair_ok(std::size_t a, std::size_t b, const VertexBits& thrice) const {
    VertexBits w = h_.edge_bits(a) & h_.edge_bits(b);
    w -= thrice;
    return w.any();
  }

  // Valid iff every pair of chosen + {e} keeps a witness.
  bool compatible(const std::vector<std::size_t>& chosen, const Cover& c, std::size_t e) const {
    const Cover next = add(c, e);
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      if (!pair_ok(chosen[i], e, next.thrice)) return false;
    }
    // Old pairs can only lose vertices that just reached count three.
    VertexBits fresh = next.thrice - c.thrice;
    if (fresh.none()) return true;
    for (std::size_t i = 0; i < chosen.size(); ++i)
      for (std::size_t j = i + 1; j < chosen.size(); ++j)
        if (!pair_ok(chosen[i], chosen[j], next.thrice)) return false;
    return true;
  }

  bool find(std::size_t d, std::vector<std::size_t>& chosen, const Cover& c) {
    meter_.tick();
    if (chosen.size() == d) return true;
    const std::size_t m = h_.edge_count();
    const std::size_t start = chosen.empty() ? 0 : chosen.back() + 1;
    for (std::size_t e = start; e + (d - chosen.size()) <= m; ++e) {
      if (!compatible(chosen, c, e)) continue;
      chosen.push_back(e);
      if (find(d, chosen, add(c, e))) return true;
      chosen.pop_back();
    }
    return false;
  }

  void maximize(std::vector<std::size_t>& chosen, const Cover& c,
                const std::vector<std::size_t>& candidates) {
    meter_.tick();
    best_ = std::max(best_, chosen.size());
    if (chosen.size() + candidates.size() <= best_) return;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (chosen.size() + (candidates.size() - k) <= best_) return;
      const std::size_t e = candidates[k];
      const Cover next = add(c, e);
      chosen.push_back(e);
      std::vector<std::size_t> rest;
      for (std::size_t r = k + 1; r < candidates.size(); ++r) {
        if (compatible(chosen, next, candidates[r])) rest.push_back(candidates[r]);
      }
      maximize(chosen, next, rest);
      chosen.pop_back();
      if (best_ == h_.edge_count()) return;
    }
  }

  std::size_t best() const noexcept { return best_; }

  DswStructure materialize(const std::vector<std::size_t>& chosen) const {
    Cover c = empty_cover();
    for (auto e : chosen) c = add(c, e);
    DswStructure s;
    s.edge_indices = chosen;
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      for (std::size_t j = i + 1; j < chosen.size(); ++j) {
        VertexBits w = h_.edge_bits(chosen[i]) & h_.edge_bits(chosen[j]);
        w -= c.thrice;
        s.witnesses.emplace(PositionPair{i, j}, static_cast<Vertex>(w.find_first()));
      }
    }
    return s;
  }

 private:
  const Hypergraph& h_;
  SearchMeter& meter_;
  std::size_t best_ = 0;
};

}  // namespace

std::optional<DswStructure> find_dsw_structure(const Hypergraph& h, std::size_t d,
                                               const SearchBudget& budget) {
  if (d < 2) throw BadParameter("find_dsw_structure needs d >= 2");
  SearchMeter meter(budget);
  meter.check_size(h.edge_count(), "find_dsw_structure");
  if (d > h.edge_count()) return std::nullopt;
  DswSearch search(h, meter);
  std::vector<std::size_t> chosen;
  if (!search.find(d, chosen, search.empty_cover())) return std::nullopt;
  auto s = search.materialize(chosen);
  if (auto check = validate_dsw(h, s); !check) {
    throw Error("internal: DSW search produced an invalid structure: " + check.detail);
  }
  return s;
}

std::size_t max_dsw_size(const Hypergraph& h, const SearchBudget& budget) {
  SearchMeter meter(budget);
  meter.check_size(h.edge_count(), "max_dsw_size");
  if (h.edge_count() == 0) return 0;
  DswSearch search(h, meter);
  std::vector<std::size_t> chosen;
  std::vector<std::size_t> candidates(h.edge_count());
  for (std::size_t i = 0; i < candidates.size(); ++i) candidates[i] = i;
  search.maximize(chosen, search.empty_cover(), candidates);
  return search.best();
}

DswCheck validate_dsw(const Hypergraph& h, const DswStructure& s) {
  const auto& idx = s.edge_indices;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= h.edge_count()) {
      return {DswDefect::kIndexOutOfRange, "edge index " + std::to_string(idx[i]) + " out of range"};
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (idx[i] == idx[j]) {
        return {DswDefect::kDuplicateIndex, "edge index " + std::to_string(idx[i]) + " repeated"};
      }
    }
  }
  std::size_t expected_pairs = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      ++expected_pairs;
      const std::string tag = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
      auto it = s.witnesses.find({i, j});
      if (it == s.witnesses.end()) return {DswDefect::kMissingWitness, tag + " has no witness"};
      const Vertex y = it->second;
      if (y >= h.ground_size()) return {DswDefect::kWitnessOutOfRange, tag + " witness out of range"};
      if (!h.edge(idx[i]).contains(y) || !h.edge(idx[j]).contains(y)) {
        return {DswDefect::kWitnessNotInBoth, tag + " witness " + std::to_string(y) + " not in both edges"};
      }
      for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k != i && k != j && h.edge(idx[k]).contains(y)) {
          return {DswDefect::kWitnessNotPrivate,
                  tag + " witness " + std::to_string(y) + " also in chosen edge " + std::to_string(k)};
        }
      }
    }
  }
  if (s.witnesses.size() != expected_pairs) {
    return {DswDefect::kExtraWitness, "witness map has entries for non-pairs"};
  }
  return {};
}

std::string to_string(DswDefect defect) {
  switch (defect) {
    case DswDefect::kNone: return "none";
    case DswDefect::kIndexOutOfRange: return "index_out_of_range";
    case DswDefect::kDuplicateIndex: return "duplicate_index";
    case DswDefect::kMissingWitness: return "missing_witness";
    case DswDefect::kExtraWitness: return "extra_witness";
    case DswDefect::kWitnessOutOfRange: return "witness_out_of_range";
    case DswDefect::kWitnessNotInBoth: return "witness_not_in_both";
    case DswDefect::kWitnessNotPrivate: return "witness_not_private";
  }
  return "unknown";
}

}  // namespace tfsub
