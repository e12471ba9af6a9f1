#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tfsub/budget.hpp"
#include "tfsub/graph.hpp"
#include "tfsub/hypergraph.hpp"
#include "tfsub/subdivision.hpp"

namespace tfsub {

/// Explicit values behind the asymptotic statement for a pattern on l
/// vertices. All fields are exact integers.
struct BoundsReport {
  std::uint64_t l = 0;
  /// Average degree forcing a K_l subdivision: 512 l^2.
  std::uint64_t mader_avg_degree = 0;
  /// Required value of sqrt(ln d): 256 l^2.
  std::uint64_t log_threshold = 0;
  /// ln of the derived-graph order needed: (256 l^2)^2 = 65536 l^4.
  std::uint64_t derived_log_order_required = 0;
  /// ln d needed before the stable restriction keeps only sqrt(d) of the
  /// d branch vertices: 2 * 65536 l^4.
  std::uint64_t dsw_log_d_required = 0;
  /// Constant c in chi >= e^{c l^4}; one valid instantiation, c = 65536.
  std::uint64_t chi_constant = 0;
  std::string chi_threshold_formula;
  std::vector<std::string> derivation;
};

/// Throws BadParameter for l = 0 or when the values overflow 64 bits.
BoundsReport compute_bounds(std::uint64_t l);

enum class StageStatus { kOk, kStalled, kBudgetExceeded, kSkipped };
std::string to_string(StageStatus s);

enum class Verdict { kRouteSuccess, kFallbackSuccess, kNotFound, kBudgetExceeded };
std::string to_string(Verdict v);

struct StageRecord {
  StageStatus status = StageStatus::kSkipped;
  /// Machine-readable stall or failure code; empty when ok.
  std::string reason;
};

struct PipelineOptions {
  SearchBudget budget;
  /// Run the direct induced search even after the route succeeds.
  bool cross_check = false;
};

struct PipelineReport {
  std::size_t host_order = 0;
  std::size_t host_size = 0;
  std::size_t pattern_order = 0;
  std::size_t pattern_size = 0;
  BoundsReport bounds;

  // (1) maximality
  StageRecord maximality;
  bool maximal_triangle_free = false;

  // (2) neighborhood hypergraph
  StageRecord hypergraph;
  std::optional<std::size_t> packing;
  std::optional<std::size_t> transversality;
  std::optional<VertexSet> transversal;
  std::optional<int> chromatic;
  std::optional<bool> chi_le_two_tau;
  /// Star-cover coloring from the transversal, 2 colors per star.
  std::vector<int> star_coloring;
  std::optional<bool> star_coloring_proper;

  // (3) DSW structure
  StageRecord dsw;
  std::optional<DswStructure> structure;
  std::vector<Vertex> x;  // origin vertex of each chosen hyperedge

  // (4) stable restriction S of X
  StageRecord stable_x;
  std::vector<std::size_t> s_positions;  // positions into x
  std::size_t stable_x_benchmark = 0;    // floor(sqrt(d))

  // (5) witnesses joined to exactly two vertices of S
  StageRecord uniqueness;
  PairWitnesses surviving;  // keyed by positions into S
  std::size_t discarded_pairs = 0;

  // (6) stable Y'
  StageRecord stable_y;
  VertexSet y_prime;
  std::size_t stable_y_benchmark = 0;  // floor(sqrt(|Y|))

  // (7) derived graph G'
  StageRecord derived;
  std::optional<Graph> derived_graph;
  std::optional<Rational> derived_avg_degree;

  // (8) subdivision of F in G'
  StageRecord derived_search;
  std::optional<SubdivisionWitness> derived_witness;

  // (9) lifted induced witness in G
  StageRecord lift;
  std::optional<SubdivisionWitness> lifted;

  // (10) direct induced search in G
  StageRecord fallback;
  std::optional<SubdivisionWitness> fallback_witness;

  Verdict verdict = Verdict::kNotFound;

  /// The witness backing the verdict, if any.
  const SubdivisionWitness* witness() const;
};

/// Runs every stage of the route on (g, f). Throws NotMaximalTriangleFree if
/// g is not maximal triangle-free. Stage budget overruns are recorded, not
/// thrown.
PipelineReport run_pipeline(const Graph& g, const Graph& f, const PipelineOptions& options = {});

struct AnalysisReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<std::size_t> min_degree;
  std::optional<std::size_t> max_degree;
  std::optional<Rational> avg_degree;
  std::optional<Rational> min_degree_ratio;
  bool triangle_free = false;
  bool maximal_triangle_free = false;
  // nullopt: budget exceeded or not applicable
  std::optional<int> chromatic_number;
  std::optional<int> clique_number;
  std::optional<std::size_t> independence_number;
  std::optional<std::size_t> packing_number;
  std::optional<std::size_t> transversality;
  std::optional<VertexSet> transversal;
  std::optional<std::size_t> max_dsw_size;
  std::optional<bool> chi_le_two_tau;
  std::vector<std::string> budget_exceeded;
};

AnalysisReport analyze(const Graph& g, const SearchBudget& budget = {});

/// Star cover coloring: vertex v joins the first star t_i with v in N[t_i];
/// centers get color 2i, leaves 2i+1. Proper whenever g is triangle-free.
std::vector<int> star_cover_coloring(const Graph& g, const VertexSet& transversal);

}  // namespace tfsub
