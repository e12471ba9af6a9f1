#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "corpus.hpp"
#include "oracles.hpp"
#include "tfsub/errors.hpp"
#include "tfsub/generators.hpp"
#include "tfsub/hypergraph.hpp"
#include "tfsub/invariants.hpp"

using namespace tfsub;

namespace {

Hypergraph singletons(std::size_t n) {
  std::vector<VertexSet> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back(VertexSet{v});
  return Hypergraph(n, edges);
}

// Random hypergraph with pairwise intersecting edges, by rejection.
Hypergraph random_intersecting(Shuffler& rng, std::size_t n, std::size_t m) {
  std::vector<VertexSet> edges;
  while (edges.size() < m) {
    std::vector<Vertex> e;
    for (Vertex v = 0; v < n; ++v)
      if (rng.below(3) == 0) e.push_back(v);
    if (e.empty()) continue;
    const VertexSet cand(e);
    bool ok = true;
    for (const auto& f : edges) {
      bool meet = false;
      for (Vertex v : f.members()) meet = meet || cand.contains(v);
      ok = ok && meet;
    }
    if (ok) edges.push_back(cand);
  }
  return Hypergraph(n, edges);
}

}  // namespace

TEST_CASE("neighborhood_hypergraph") {
  const auto c5 = neighborhood_hypergraph(gen_cycle(5));
  CHECK(c5.edge_count() == 5);
  for (const auto& e : c5.edges()) CHECK(e.size() == 3);
  CHECK(c5.edge(0) == VertexSet{0, 1, 4});

  const auto k1 = neighborhood_hypergraph(Graph(1));
  CHECK(k1.edge_count() == 1);
  CHECK(k1.edge(0) == VertexSet{0});

  const auto p = neighborhood_hypergraph(gen_petersen());
  CHECK(p.edge_count() == 10);
  for (const auto& e : p.edges()) CHECK(e.size() == 4);

  CHECK_THROWS_AS(neighborhood_hypergraph(Graph(0)), EmptyGraph);
}

TEST_CASE("hypergraph construction errors") {
  CHECK_THROWS_AS(Hypergraph(3, {VertexSet{}}), BadParameter);
  CHECK_THROWS_AS(Hypergraph(3, {VertexSet{0, 3}}), OutOfRange);
}

TEST_CASE("packing_number") {
  CHECK(packing_number(neighborhood_hypergraph(gen_cycle(5))) == 1);
  CHECK(packing_number(singletons(3)) == 3);
  CHECK(packing_number(neighborhood_hypergraph(gen_cycle(6))) == 2);
  CHECK(packing_number(Hypergraph(2, {})) == 0);
}

TEST_CASE("packing number is one on maximal triangle-free graphs") {
  for (const auto& [name, g] : corpus::mixed_mtf(200, 24, 17)) {
    CAPTURE(name);
    CHECK(packing_number(neighborhood_hypergraph(g)) == 1);
  }
}

TEST_CASE("packing_number agrees with subset enumeration") {
  for (const auto& [name, g] : corpus::small_hosts(80, 10, 41)) {
    if (g.order() == 0) continue;
    CAPTURE(name);
    const auto h = neighborhood_hypergraph(g);
    CHECK(packing_number(h) == oracle::packing_number(h));
  }
}

TEST_CASE("transversality") {
  const auto c5 = transversality(neighborhood_hypergraph(gen_cycle(5)));
  CHECK(c5.size == 2);
  CHECK(c5.witness == VertexSet{0, 2});
  CHECK(transversality(Hypergraph(3, {VertexSet{0, 1, 2}})).size == 1);
  const auto p = transversality(neighborhood_hypergraph(gen_petersen()));
  CHECK(p.size == 3);
  CHECK(p.size == oracle::domination_number(gen_petersen()));
  CHECK(is_transversal(neighborhood_hypergraph(gen_petersen()), p.witness));
  CHECK(transversality(Hypergraph(4, {})).size == 0);
}

TEST_CASE("transversality agrees with domination number and bounds packing") {
  for (const auto& [name, g] : corpus::small_hosts(80, 11, 43)) {
    if (g.order() == 0) continue;
    CAPTURE(name);
    const auto h = neighborhood_hypergraph(g);
    const auto t = transversality(h);
    CHECK(t.size == oracle::domination_number(g));
    CHECK(t.size == t.witness.size());
    CHECK(is_transversal(h, t.witness));
    CHECK(t.size >= packing_number(h));
  }
  Shuffler rng(5);
  for (int i = 0; i < 60; ++i) {
    const auto h = random_intersecting(rng, 3 + rng.below(8), 1 + rng.below(8));
    CHECK(transversality(h).size == oracle::transversality(h));
  }
}

TEST_CASE("transversal witness is the lexicographically least minimum one") {
  for (const auto& [name, g] : corpus::small_hosts(40, 9, 47)) {
    if (g.order() == 0) continue;
    CAPTURE(name);
    const auto h = neighborhood_hypergraph(g);
    const auto t = transversality(h);
    std::vector<Vertex> best;
    for (std::uint32_t mask = 0; mask < (1U << g.order()); ++mask) {
      std::vector<Vertex> cur;
      for (Vertex v = 0; v < g.order(); ++v)
        if (mask >> v & 1U) cur.push_back(v);
      if (cur.size() == t.size && is_transversal(h, VertexSet(cur)) && (best.empty() || cur < best)) best = cur;
    }
    CHECK(best == t.witness.members());
  }
}

TEST_CASE("dsw_threshold") {
  CHECK(dsw_threshold(1) == 220);
  CHECK(dsw_threshold(2) == 2376);
  CHECK(dsw_threshold(3) == 11088);
  CHECK_THROWS_AS(dsw_threshold(0), BadParameter);
  CHECK_THROWS_AS(dsw_threshold(std::uint64_t{1} << 20), BadParameter);
  using boost::multiprecision::cpp_int;
  for (std::uint64_t d = 1; d <= 200; ++d) {
    const cpp_int big = cpp_int(11) * d * d * (d + 4) * (d + 1) * (d + 1);
    CHECK(cpp_int(dsw_threshold(d)) == big);
  }
}

TEST_CASE("find_dsw_structure on C5") {
  const auto h = neighborhood_hypergraph(gen_cycle(5));

  SUBCASE("d=2: the first pair (N[0], N[1]) with smallest witness 0") {
    const auto s = find_dsw_structure(h, 2);
    REQUIRE(s);
    CHECK(s->edge_indices == std::vector<std::size_t>{0, 1});
    CHECK(s->witnesses.at({0, 1}) == 0);
    CHECK(validate_dsw(h, *s));
  }
  SUBCASE("d=3: first triple is (N[0], N[1], N[3])") {
    const auto s = find_dsw_structure(h, 3);
    REQUIRE(s);
    CHECK(s->edge_indices == std::vector<std::size_t>{0, 1, 3});
    CHECK(s->witnesses.at({0, 1}) == 0);
    CHECK(s->witnesses.at({0, 2}) == 4);
    CHECK(s->witnesses.at({1, 2}) == 2);
    CHECK(validate_dsw(h, *s));
  }
  SUBCASE("the alternating triple (N[0], N[2], N[4]) is also valid") {
    DswStructure s;
    s.edge_indices = {0, 2, 4};
    s.witnesses = {{{0, 1}, 1}, {{1, 2}, 3}, {{0, 2}, 0}};
    CHECK(validate_dsw(h, s));
    s.witnesses[{0, 2}] = 4;
    CHECK(validate_dsw(h, s));
  }
  SUBCASE("d=4 and d=5 are absent") {
    CHECK_FALSE(find_dsw_structure(h, 4));
    CHECK_FALSE(find_dsw_structure(h, 5));
    CHECK(max_dsw_size(h) == 3);
    CHECK(oracle::max_dsw_size(h) == 3);
  }
}

TEST_CASE("find_dsw_structure small cases") {
  const Hypergraph twice_zero(1, {VertexSet{0}, VertexSet{0}});
  const auto s = find_dsw_structure(twice_zero, 2);
  REQUIRE(s);
  CHECK(s->witnesses.at({0, 1}) == 0);

  const Hypergraph twice_pair(2, {VertexSet{0, 1}, VertexSet{0, 1}});
  REQUIRE(find_dsw_structure(twice_pair, 2));

  CHECK_FALSE(find_dsw_structure(singletons(3), 2));
  CHECK_THROWS_AS(find_dsw_structure(singletons(3), 1), BadParameter);
  CHECK_FALSE(find_dsw_structure(singletons(3), 4));
}

TEST_CASE("max_dsw_size") {
  CHECK(max_dsw_size(Hypergraph(3, {VertexSet{0, 1, 2}})) == 1);
  CHECK(max_dsw_size(singletons(3)) == 1);
  CHECK(max_dsw_size(Hypergraph(3, {})) == 0);
  const auto synthetic = gen_synthetic_dsw(SyntheticDswSpec::all_pairs(5));
  CHECK(max_dsw_size(neighborhood_hypergraph(synthetic.graph)) >= 5);
}

TEST_CASE("validate_dsw reports each defect") {
  const auto h = neighborhood_hypergraph(gen_cycle(5));
  DswStructure good;
  good.edge_indices = {0, 1, 3};
  good.witnesses = {{{0, 1}, 0}, {{0, 2}, 4}, {{1, 2}, 2}};
  REQUIRE(validate_dsw(h, good));

  auto s = good;
  s.edge_indices = {0, 1, 7};
  CHECK(validate_dsw(h, s).defect == DswDefect::kIndexOutOfRange);
  s = good;
  s.edge_indices = {0, 0, 3};
  CHECK(validate_dsw(h, s).defect == DswDefect::kDuplicateIndex);
  s = good;
  s.witnesses.erase({1, 2});
  CHECK(validate_dsw(h, s).defect == DswDefect::kMissingWitness);
  s = good;
  s.witnesses[{0, 5}] = 1;
  CHECK(validate_dsw(h, s).defect == DswDefect::kExtraWitness);
  s = good;
  s.witnesses[{0, 1}] = 9;
  CHECK(validate_dsw(h, s).defect == DswDefect::kWitnessOutOfRange);
  s = good;
  s.witnesses[{0, 1}] = 3;
  CHECK(validate_dsw(h, s).defect == DswDefect::kWitnessNotInBoth);
  s = good;
  s.witnesses[{1, 2}] = 3;
  CHECK(validate_dsw(h, s).defect == DswDefect::kWitnessNotInBoth);
  s = good;
  s.edge_indices = {0, 1, 4};
  s.witnesses = {{{0, 1}, 0}, {{0, 2}, 4}, {{1, 2}, 0}};
  CHECK(validate_dsw(h, s).defect == DswDefect::kWitnessNotPrivate);
}

TEST_CASE("max_dsw_size agrees with subset enumeration") {
  for (const auto& [name, g] : corpus::mixed_mtf(60, 12, 61)) {
    CAPTURE(name);
    const auto h = neighborhood_hypergraph(g);
    const auto d = max_dsw_size(h);
    CHECK(d == oracle::max_dsw_size(h));
    if (d >= 2) {
      const auto s = find_dsw_structure(h, d);
      REQUIRE(s);
      CHECK(validate_dsw(h, *s));
      CHECK_FALSE(find_dsw_structure(h, d + 1));
    }
  }
  Shuffler rng(71);
  for (int i = 0; i < 80; ++i) {
    const auto h = random_intersecting(rng, 3 + rng.below(6), 2 + rng.below(7));
    CHECK(max_dsw_size(h) == oracle::max_dsw_size(h));
  }
}

TEST_CASE("structures are downward closed") {
  for (const auto& [name, g] : corpus::mixed_mtf(30, 14, 67)) {
    CAPTURE(name);
    const auto h = neighborhood_hypergraph(g);
    const auto d = max_dsw_size(h);
    for (std::size_t k = 2; k <= d; ++k) CHECK(find_dsw_structure(h, k));
  }
}

TEST_CASE("large transversality forces large structures when it exceeds the threshold") {
  // At this scale the premise never holds, so the check is vacuous but kept.
  for (const auto& [name, g] : corpus::mixed_mtf(40, 16, 73)) {
    const auto h = neighborhood_hypergraph(g);
    const auto tau = transversality(h).size;
    const auto dmax = max_dsw_size(h);
    for (std::uint64_t d = 1; d <= 3; ++d)
      if (tau > dsw_threshold(d)) CHECK(dmax >= d);
  }
}

TEST_CASE("budget overruns surface as BudgetExceeded") {
  SearchBudget tiny;
  tiny.max_nodes = 2;
  const auto h = neighborhood_hypergraph(corpus::clebsch());
  CHECK_THROWS_AS(transversality(h, tiny), BudgetExceeded);
  CHECK_THROWS_AS(max_dsw_size(h, tiny), BudgetExceeded);
}
