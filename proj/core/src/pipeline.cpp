#include "tfsub/pipeline.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "tfsub/errors.hpp"
#include "tfsub/invariants.hpp"

namespace tfsub {
namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw BadParameter("bound computation overflows 64 bits");
  }
  return a * b;
}

}  // namespace

BoundsReport compute_bounds(std::uint64_t l) {
  if (l == 0) throw BadParameter("compute_bounds needs l >= 1");
  BoundsReport b;
  b.l = l;
  const std::uint64_t l2 = checked_mul(l, l);
  const std::uint64_t l4 = checked_mul(l2, l2);
  b.mader_avg_degree = checked_mul(512, l2);
  b.log_threshold = checked_mul(256, l2);
  b.derived_log_order_required = checked_mul(65536, l4);
  b.dsw_log_d_required = checked_mul(2, b.derived_log_order_required);
  b.chi_constant = 65536;
  b.chi_threshold_formula = "chi(G) >= e^(65536*l^4) = e^(" +
                            std::to_string(b.derived_log_order_required) +
                            ")  [one valid instantiation of e^(theta(l^4)); the constant is a choice]";
  const auto s = [](std::uint64_t v) { return std::to_string(v); };
  b.derivation = {
      "average degree 512*l^2 = " + s(b.mader_avg_degree) + " forces a subdivision of K_l",
      "a stable Y' on d vertices gives average degree ~ sqrt(ln d), so sqrt(ln d) >= 256*l^2 = " +
          s(b.log_threshold) + " suffices",
      "squaring: ln d >= 65536*l^4 = " + s(b.derived_log_order_required),
      "the stable restriction keeps >= sqrt(d) branch vertices: ln d >= 2*65536*l^4 = " +
          s(b.dsw_log_d_required) + " before restriction",
      "taking c = 65536 in chi >= e^(c*l^4) (one valid instantiation, not a claimed optimum)",
  };
  return b;
}

std::string to_string(StageStatus s) {
  switch (s) {
    case StageStatus::kOk: return "ok";
    case StageStatus::kStalled: return "stalled";
    case StageStatus::kBudgetExceeded: return "budget_exceeded";
    case StageStatus::kSkipped: return "skipped";
  }
  return "unknown";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kRouteSuccess: return "route-success";
    case Verdict::kFallbackSuccess: return "fallback-success";
    case Verdict::kNotFound: return "not-found";
    case Verdict::kBudgetExceeded: return "budget-exceeded";
  }
  return "unknown";
}

const SubdivisionWitness* PipelineReport::witness() const {
  if (verdict == Verdict::kRouteSuccess && lifted) return &*lifted;
  if (verdict == Verdict::kFallbackSuccess && fallback_witness) return &*fallback_witness;
  return nullptr;
}

std::vector<int> star_cover_coloring(const Graph& g, const VertexSet& transversal) {
  std::vector<int> colors(g.order(), -1);
  for (Vertex v = 0; v < g.order(); ++v) {
    for (std::size_t i = 0; i < transversal.size(); ++i) {
      const Vertex t = transversal[i];
      if (t == v || g.adjacent(t, v)) {
        colors[v] = static_cast<int>(2 * i + (t == v ? 0 : 1));
        break;
      }
    }
  }
  return colors;
}

namespace {

StageRecord ok() { return {StageStatus::kOk, {}}; }
StageRecord stalled(std::string reason) { return {StageStatus::kStalled, std::move(reason)}; }
StageRecord over_budget(const std::string& what) {
  return {StageStatus::kBudgetExceeded, what + "_budget_exceeded"};
}

Vertex witness_between(const PairWitnesses& w, std::size_t a, std::size_t b) {
  return w.at({std::min(a, b), std::max(a, b)});
}

// Stages 3 through 9. Returns false when the route stalls.
bool run_route(const Graph& g, const Graph& f, const Hypergraph& h, const SearchBudget& budget,
               PipelineReport& r) {
  std::size_t d = 0;
  try {
    d = max_dsw_size(h, budget);
    if (d >= 2) r.structure = find_dsw_structure(h, d, budget);
  } catch (const BudgetExceeded&) {
    r.dsw = over_budget("dsw");
    return false;
  }
  if (!r.structure) {
    r.dsw = stalled("dsw_structure_too_small");
    return false;
  }
  r.dsw = ok();
  for (auto idx : r.structure->edge_indices) r.x.push_back(h.origin()[idx]);

  // (4) Stable restriction of X.
  r.stable_x_benchmark = isqrt(d);
  const auto gx = induced_subgraph(g, VertexSet(r.x));
  VertexSet stable;
  try {
    stable = max_independent_set(gx.graph, budget);
  } catch (const BudgetExceeded&) {
    r.stable_x = over_budget("stable_x");
    return false;
  }
  // x is increasing, so induced_subgraph indices coincide with positions.
  r.s_positions.assign(stable.begin(), stable.end());
  std::vector<Vertex> s_vertices;
  for (auto pos : r.s_positions) s_vertices.push_back(r.x[pos]);
  if (r.s_positions.size() < f.order()) {
    r.stable_x = stalled("stable_restriction_smaller_than_pattern");
    return false;
  }
  r.stable_x = ok();

  // (5) Keep witnesses joined to exactly their two vertices of S.
  for (std::size_t a = 0; a < s_vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < s_vertices.size(); ++b) {
      const Vertex y = witness_between(r.structure->witnesses, r.s_positions[a], r.s_positions[b]);
      bool exact = std::find(s_vertices.begin(), s_vertices.end(), y) == s_vertices.end();
      for (std::size_t c = 0; c < s_vertices.size() && exact; ++c) {
        const bool should = (c == a || c == b);
        if (g.adjacent(y, s_vertices[c]) != should) exact = false;
      }
      if (exact) {
        r.surviving.emplace(PositionPair{a, b}, y);
      } else {
        ++r.discarded_pairs;
      }
    }
  }
  for (const auto& [pair, y] : r.surviving) {
    std::size_t inside = 0;
    for (Vertex s : s_vertices) inside += g.adjacent(y, s) ? 1 : 0;
    if (inside != 2) throw Error("internal: surviving witness without exactly two neighbors in S");
  }
  if (r.surviving.empty() && f.size() > 0) {
    r.uniqueness = stalled("no_surviving_witnesses");
    return false;
  }
  r.uniqueness = ok();

  // (6) Stable Y'.
  std::vector<Vertex> ys;
  for (const auto& [pair, y] : r.surviving) ys.push_back(y);
  const VertexSet y_set(ys);
  r.stable_y_benchmark = isqrt(y_set.size());
  try {
    const auto gy = induced_subgraph(g, y_set);
    const auto local = max_independent_set(gy.graph, budget);
    std::vector<Vertex> picked;
    for (Vertex v : local) picked.push_back(gy.to_host[v]);
    r.y_prime = VertexSet(std::move(picked));
  } catch (const BudgetExceeded&) {
    r.stable_y = over_budget("stable_y");
    return false;
  }
  r.stable_y = ok();

  // (7) Derived graph on S.
  try {
    auto dg = derived_graph(s_vertices, r.surviving, r.y_prime);
    r.derived_graph = std::move(dg.graph);
  } catch (const InconsistentWitnesses&) {
    r.derived = stalled("inconsistent_witnesses");
    return false;
  }
  if (r.derived_graph->order() > 0) r.derived_avg_degree = average_degree(*r.derived_graph);
  r.derived = ok();

  // (8) Subdivision of F in G'.
  try {
    r.derived_witness = find_subdivision(f, *r.derived_graph, false, budget);
  } catch (const BudgetExceeded&) {
    r.derived_search = over_budget("derived_search");
    return false;
  }
  if (!r.derived_witness) {
    r.derived_search = stalled("no_subdivision_in_derived_graph");
    return false;
  }
  r.derived_search = ok();

  // (9) Lift the used part G'' of G' back into g.
  const auto& dw = *r.derived_witness;
  const VertexSet used = dw.used_vertices();
  std::vector<std::size_t> local(r.derived_graph->order(), 0);
  for (std::size_t i = 0; i < used.size(); ++i) local[used[i]] = i;
  Graph sub(used.size());
  for (const auto& path : dw.paths) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      sub.add_edge(static_cast<Vertex>(local[path[i]]), static_cast<Vertex>(local[path[i + 1]]));
    }
  }
  std::vector<std::size_t> mapping(used.begin(), used.end());
  try {
    lift_to_induced_subdivision(g, s_vertices, r.surviving, sub, mapping);
  } catch (const PreconditionViolated& e) {
    r.lift = stalled(std::string("lifting_precondition_") + e.condition());
    return false;
  }

  SubdivisionWitness lifted{f, g, {}, {}, true};
  for (Vertex b : dw.branch_map) lifted.branch_map.push_back(s_vertices[b]);
  for (const auto& path : dw.paths) {
    Path expanded{s_vertices[path.front()]};
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      expanded.push_back(witness_between(r.surviving, path[i], path[i + 1]));
      expanded.push_back(s_vertices[path[i + 1]]);
    }
    lifted.paths.push_back(std::move(expanded));
  }
  if (auto check = verify_witness(lifted, true); !check) {
    r.lift = stalled("lifted_witness_rejected_" + to_string(check.defect));
    return false;
  }
  r.lifted = std::move(lifted);
  r.lift = ok();
  return true;
}

}  // namespace

PipelineReport run_pipeline(const Graph& g, const Graph& f, const PipelineOptions& options) {
  const SearchBudget& budget = options.budget;
  PipelineReport r;
  r.host_order = g.order();
  r.host_size = g.size();
  r.pattern_order = f.order();
  r.pattern_size = f.size();
  r.bounds = compute_bounds(std::max<std::uint64_t>(1, f.order()));

  // (1)
  r.maximal_triangle_free = g.order() > 0 && is_maximal_triangle_free(g);
  if (!r.maximal_triangle_free) {
    throw NotMaximalTriangleFree("pipeline host must be a non-empty maximal triangle-free graph");
  }
  r.maximality = ok();

  // (2)
  const Hypergraph h = neighborhood_hypergraph(g);
  try {
    r.packing = packing_number(h, budget);
    const auto t = transversality(h, budget);
    r.transversality = t.size;
    r.transversal = t.witness;
    r.star_coloring = star_cover_coloring(g, t.witness);
    r.star_coloring_proper = is_proper_coloring(g, r.star_coloring);
    r.chromatic = chromatic_number(g, budget);
    r.chi_le_two_tau = static_cast<std::size_t>(*r.chromatic) <= 2 * t.size;
    r.hypergraph = ok();
    if (!*r.chi_le_two_tau || !*r.star_coloring_proper) r.hypergraph = stalled("star_cover_check_failed");
  } catch (const BudgetExceeded&) {
    r.hypergraph = over_budget("hypergraph");
  }

  const bool routed = run_route(g, f, h, budget, r);

  if (!routed || options.cross_check) {
    try {
      r.fallback_witness = find_subdivision(f, g, true, budget);
      r.fallback = r.fallback_witness ? ok() : stalled("no_induced_subdivision");
    } catch (const BudgetExceeded&) {
      r.fallback = over_budget("fallback");
    }
  }

  if (routed) {
    r.verdict = Verdict::kRouteSuccess;
  } else if (r.fallback_witness) {
    r.verdict = Verdict::kFallbackSuccess;
  } else if (r.fallback.status == StageStatus::kBudgetExceeded) {
    r.verdict = Verdict::kBudgetExceeded;
  } else {
    r.verdict = Verdict::kNotFound;
  }
  return r;
}

AnalysisReport analyze(const Graph& g, const SearchBudget& budget) {
  AnalysisReport a;
  a.n = g.order();
  a.m = g.size();
  a.triangle_free = is_triangle_free(g);
  a.maximal_triangle_free = is_maximal_triangle_free(g);
  if (a.n > 0) {
    a.min_degree = g.min_degree();
    a.max_degree = g.max_degree();
    a.avg_degree = average_degree(g);
    a.min_degree_ratio = Rational::make(g.min_degree(), a.n);
  }

  const auto attempt = [&](const char* field, auto&& fn) {
    try {
      fn();
    } catch (const BudgetExceeded&) {
      a.budget_exceeded.emplace_back(field);
    }
  };
  attempt("chromatic_number", [&] { a.chromatic_number = chromatic_number(g, budget); });
  attempt("clique_number", [&] { a.clique_number = clique_number(g, budget); });
  attempt("independence_number", [&] { a.independence_number = max_independent_set(g, budget).size(); });
  if (a.n > 0) {
    const Hypergraph h = neighborhood_hypergraph(g);
    attempt("packing_number", [&] { a.packing_number = packing_number(h, budget); });
    attempt("transversality", [&] {
      auto t = transversality(h, budget);
      a.transversality = t.size;
      a.transversal = std::move(t.witness);
    });
    attempt("max_dsw_size", [&] { a.max_dsw_size = max_dsw_size(h, budget); });
  }
  if (a.triangle_free && a.chromatic_number && a.transversality) {
    a.chi_le_two_tau = static_cast<std::size_t>(*a.chromatic_number) <= 2 * *a.transversality;
  }
  return a;
}

}  // namespace tfsub
