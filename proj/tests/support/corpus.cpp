#include "corpus.hpp"

#include <bit>

#include "tfsub/generators.hpp"

namespace corpus {

using namespace tfsub;

Graph grotzsch() { return gen_mycielski(gen_cycle(5)); }

Graph clebsch() {
  Graph g(16);
  for (Vertex u = 0; u < 16; ++u)
    for (Vertex v = u + 1; v < 16; ++v) {
      const unsigned x = u ^ v;
      if (std::popcount(x) == 1 || x == 15) g.add_edge(u, v);
    }
  return g;
}

std::vector<Named> mixed_mtf(std::size_t count, std::size_t max_n, std::uint64_t seed) {
  Shuffler rng(seed);
  std::vector<Named> named{{"K1", Graph(1)}, {"K2", gen_complete(2)}, {"C5", gen_cycle(5)},
                           {"petersen", gen_petersen()}, {"grotzsch", grotzsch()}, {"clebsch", clebsch()}};
  std::vector<Named> out;
  for (std::size_t i = 0; out.size() < count; ++i) {
    switch (i % 5) {
      case 0:
      case 1: {
        const auto n = 1 + rng.below(max_n);
        const auto s = rng.below(1u << 30);
        out.push_back({"random-mtf(" + std::to_string(n) + "," + std::to_string(s) + ")", gen_random_mtf(n, s)});
        break;
      }
      case 2: {
        const auto a = 1 + rng.below(max_n / 2);
        const auto b = 1 + rng.below(max_n - a);
        out.push_back({"K" + std::to_string(a) + "," + std::to_string(b), gen_complete_bipartite(a, b)});
        break;
      }
      case 3: {
        std::vector<std::size_t> sizes(5, 1);
        const auto extra = rng.below(max_n - 4);
        for (std::size_t k = 0; k < extra; ++k) ++sizes[rng.below(5)];
        out.push_back({"c5-blowup", gen_c5_blowup(sizes)});
        break;
      }
      case 4: {
        const auto& pick = named[(i / 5) % named.size()];
        if (pick.graph.order() <= max_n) {
          out.push_back(pick);
        } else {
          const auto d = 3 + rng.below(2);
          auto syn = gen_synthetic_dsw(SyntheticDswSpec::all_pairs(d, true, rng.below(1000)));
          if (syn.graph.order() <= max_n) out.push_back({"padded-dsw", syn.graph});
        }
        break;
      }
    }
  }
  return out;
}

std::vector<Named> triangle_free(std::size_t count, std::size_t max_n, std::uint64_t seed) {
  Shuffler rng(seed);
  std::vector<Named> out;
  for (std::size_t i = 0; out.size() < count; ++i) {
    const auto n = 1 + rng.below(max_n);
    switch (i % 4) {
      case 0:
        out.push_back({"random-tf", gen_random_triangle_free(n, rng.below(4 * n + 1), rng.below(1u << 30))});
        break;
      case 1:
        out.push_back({"random-mtf", gen_random_mtf(n, rng.below(1u << 30))});
        break;
      case 2:
        out.push_back({"star", gen_star(n - 1)});
        break;
      case 3: {
        const auto a = rng.below(n + 1);
        out.push_back({"bipartite", gen_complete_bipartite(a, n - a)});
        break;
      }
    }
  }
  return out;
}

std::vector<Named> small_hosts(std::size_t count, std::size_t max_n, std::uint64_t seed) {
  Shuffler rng(seed);
  std::vector<Named> out;
  for (std::size_t i = 0; out.size() < count; ++i) {
    const auto n = 3 + rng.below(max_n - 2);
    switch (i % 5) {
      case 0:
        out.push_back({"cycle", gen_cycle(n)});
        break;
      case 1:
        out.push_back({"random-mtf", gen_random_mtf(n, rng.below(1u << 30))});
        break;
      default: {
        const auto num = static_cast<std::uint32_t>(2 + rng.below(5));
        out.push_back({"gnp(" + std::to_string(num) + "/10)", gen_gnp(n, num, 10, rng.below(1u << 30))});
        break;
      }
    }
  }
  return out;
}

}  // namespace corpus
