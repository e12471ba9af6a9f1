#include <doctest.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "tfsub/errors.hpp"
#include "tfsub/generators.hpp"
#include "tfsub/invariants.hpp"
#include "tfsub/io.hpp"
#include "tfsub/pipeline.hpp"

using namespace tfsub;

TEST_CASE("compute_bounds") {
  const auto b3 = compute_bounds(3);
  CHECK(b3.mader_avg_degree == 4608);
  CHECK(b3.log_threshold == 2304);
  CHECK(b3.derived_log_order_required == 65536ULL * 81);
  CHECK(b3.dsw_log_d_required == 2 * 65536ULL * 81);
  CHECK(compute_bounds(1).mader_avg_degree == 512);
  const auto b2 = compute_bounds(2);
  CHECK(b2.mader_avg_degree == 2048);
  CHECK(b2.log_threshold == 1024);
  CHECK(b2.chi_constant == 65536);
  CHECK_FALSE(b2.derivation.empty());
  CHECK_THROWS_AS(compute_bounds(0), BadParameter);
  CHECK_THROWS_AS(compute_bounds(std::uint64_t{1} << 20), BadParameter);
}

TEST_CASE("star_cover_coloring is proper on triangle-free graphs") {
  for (const auto& [name, g] : corpus::mixed_mtf(80, 20, 3)) {
    CAPTURE(name);
    const auto t = transversality(neighborhood_hypergraph(g));
    const auto colors = star_cover_coloring(g, t.witness);
    CHECK(is_proper_coloring(g, colors));
    for (int c : colors) CHECK(c < static_cast<int>(2 * t.size));
  }
}

TEST_CASE("pipeline on C5 with K3 stalls and falls back") {
  const auto r = run_pipeline(gen_cycle(5), gen_complete(3));
  CHECK(r.maximality.status == StageStatus::kOk);
  CHECK(r.packing == 1);
  CHECK(r.transversality == 2);
  CHECK(r.chromatic == 3);
  CHECK(r.chi_le_two_tau == true);
  CHECK(r.star_coloring_proper == true);
  REQUIRE(r.structure);
  CHECK(r.structure->d() == 3);
  CHECK(r.x == std::vector<Vertex>{0, 1, 3});
  CHECK(r.s_positions.size() == 2);
  CHECK(r.stable_x.status == StageStatus::kStalled);
  CHECK(r.stable_x.reason == "stable_restriction_smaller_than_pattern");
  CHECK(r.verdict == Verdict::kFallbackSuccess);
  REQUIRE(r.witness());
  CHECK(verify_witness(*r.witness(), true));
  CHECK(r.witness()->used_vertices().size() == 5);
}

TEST_CASE("pipeline on Petersen with K3 finds an induced cycle") {
  const auto r = run_pipeline(gen_petersen(), gen_complete(3));
  CHECK(r.transversality == 3);
  CHECK(r.chromatic == 3);
  CHECK((r.verdict == Verdict::kRouteSuccess || r.verdict == Verdict::kFallbackSuccess));
  REQUIRE(r.witness());
  CHECK(verify_witness(*r.witness(), true));
}

TEST_CASE("pipeline on a padded d=5 configuration succeeds by the route") {
  const auto s = gen_synthetic_dsw(SyntheticDswSpec::all_pairs(5, true, 1));
  PipelineOptions opts;
  opts.cross_check = true;
  const auto r = run_pipeline(s.graph, gen_complete(3), opts);
  CHECK(r.verdict == Verdict::kRouteSuccess);
  REQUIRE(r.lifted);
  CHECK(verify_witness(*r.lifted, true));
  CHECK(r.fallback_witness.has_value());
  REQUIRE(r.derived_graph);
  CHECK(r.derived_graph->order() >= 3);
}

TEST_CASE("pipeline with a single-vertex pattern") {
  for (const auto& [name, g] : corpus::mixed_mtf(20, 12, 19)) {
    CAPTURE(name);
    const auto r = run_pipeline(g, Graph(1));
    REQUIRE(r.witness());
    CHECK(r.witness()->branch_map.size() == 1);
    CHECK(verify_witness(*r.witness(), true));
  }
}

TEST_CASE("pipeline rejects hosts that are not maximal triangle-free") {
  CHECK_THROWS_AS(run_pipeline(gen_path(4), gen_complete(3)), NotMaximalTriangleFree);
  CHECK_THROWS_AS(run_pipeline(gen_complete(3), gen_complete(3)), NotMaximalTriangleFree);
  CHECK_THROWS_AS(run_pipeline(Graph(0), Graph(1)), NotMaximalTriangleFree);
}

TEST_CASE("pipeline verdicts agree with the oracle") {
  const Graph k3 = gen_complete(3);
  const Graph p3 = gen_path(3);
  for (const auto& [name, g] : corpus::mixed_mtf(40, 9, 29)) {
    for (const Graph* f : {&k3, &p3}) {
      CAPTURE(name);
      const auto r = run_pipeline(g, *f);
      const bool found = r.witness() != nullptr;
      CHECK(found == oracle::has_subdivision(*f, g, true));
      if (found) CHECK(verify_witness(*r.witness(), true));
    }
  }
}

TEST_CASE("route successes always carry a verified lifted witness") {
  Shuffler rng(91);
  int routes = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 4 + rng.below(3);
    const auto s = gen_synthetic_dsw(SyntheticDswSpec::all_pairs(d, true, rng.below(1000)));
    const auto r = run_pipeline(s.graph, gen_complete(3));
    if (r.verdict == Verdict::kRouteSuccess) {
      ++routes;
      REQUIRE(r.lifted);
      CHECK(verify_witness(*r.lifted, true));
      CHECK(r.lifted->pattern == gen_complete(3));
    }
    CHECK(r.witness());
  }
  CHECK(routes > 0);
}

TEST_CASE("pipeline records budget overruns instead of throwing") {
  PipelineOptions opts;
  opts.budget.max_nodes = 1;
  const auto r = run_pipeline(corpus::clebsch(), gen_complete(4), opts);
  CHECK(r.verdict == Verdict::kBudgetExceeded);
  CHECK(r.fallback.status == StageStatus::kBudgetExceeded);
}

TEST_CASE("analyze") {
  const auto c5 = analyze(gen_cycle(5));
  CHECK(c5.n == 5);
  CHECK(c5.chromatic_number == 3);
  CHECK(c5.clique_number == 2);
  CHECK(c5.independence_number == 2);
  CHECK(c5.packing_number == 1);
  CHECK(c5.transversality == 2);
  CHECK(c5.chi_le_two_tau == true);
  CHECK(c5.max_dsw_size == 3);

  const auto k1 = analyze(Graph(1));
  CHECK(k1.chromatic_number == 1);
  CHECK(k1.transversality == 1);

  const auto p = analyze(gen_petersen());
  CHECK(p.chromatic_number == 3);
  CHECK(p.transversality == 3);
  CHECK(p.packing_number == 1);
  CHECK(p.chi_le_two_tau == true);

  const auto k4 = analyze(gen_complete(4));
  CHECK_FALSE(k4.triangle_free);
  CHECK_FALSE(k4.chi_le_two_tau.has_value());

  const auto empty = analyze(Graph(0));
  CHECK_FALSE(empty.transversality.has_value());
  CHECK_FALSE(empty.avg_degree.has_value());
}

TEST_CASE("analyze reports budget exhaustion per field") {
  SearchBudget tiny;
  tiny.max_nodes = 1;
  const auto a = analyze(corpus::clebsch(), tiny);
  CHECK_FALSE(a.budget_exceeded.empty());
  CHECK(a.triangle_free);
}

TEST_CASE("chi <= 2 tau on maximal triangle-free graphs") {
  for (const auto& [name, g] : corpus::mixed_mtf(80, 18, 37)) {
    CAPTURE(name);
    const auto a = analyze(g);
    REQUIRE(a.chi_le_two_tau);
    CHECK(*a.chi_le_two_tau);
  }
}

TEST_CASE("pipeline JSON is reproducible") {
  const auto s = gen_synthetic_dsw(SyntheticDswSpec::all_pairs(5, true, 4));
  const auto first = pipeline_to_json(run_pipeline(s.graph, gen_complete(3)));
  const auto second = pipeline_to_json(run_pipeline(s.graph, gen_complete(3)));
  CHECK(first == second);
}
