// tfsub: generate, analyze and search maximal triangle-free graphs.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tfsub/errors.hpp"
#include "tfsub/generators.hpp"
#include "tfsub/hypergraph.hpp"
#include "tfsub/invariants.hpp"
#include "tfsub/io.hpp"
#include "tfsub/pipeline.hpp"
#include "tfsub/subdivision.hpp"

namespace {

enum Exit : int { kFound = 0, kNotFound = 1, kBudget = 2, kInputError = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "auto";
  std::uint64_t budget_nodes = tfsub::SearchBudget{}.max_nodes;
  double budget_secs = tfsub::SearchBudget{}.max_time.count();
  bool json = false;
  bool text = false;
  bool no_color = false;

  tfsub::SearchBudget budget() const {
    tfsub::SearchBudget b;
    b.max_nodes = budget_nodes;
    b.max_time = std::chrono::duration<double>(budget_secs);
    return b;
  }
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

tfsub::Graph load(const std::string& path, const std::string& format) {
  const std::string text = slurp(path);
  try {
    if (format == "auto") return tfsub::parse_graph(text);
    return tfsub::parse_graph(text, format == "json" ? tfsub::GraphFormat::kJson : tfsub::GraphFormat::kGraph6);
  } catch (const tfsub::ParseError& e) {
    throw InputError(path + ": " + e.what() + " (byte " + std::to_string(e.offset()) + ")");
  } catch (const tfsub::Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

bool use_color(const Common& c) {
  if (c.no_color) return false;
  const char* no_color = std::getenv("NO_COLOR");
  if (no_color != nullptr && *no_color != '\0') return false;
  return isatty(fileno(stdout)) != 0;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

void add_budget(CLI::App* cmd, Common& c) {
  cmd->add_option("--budget-nodes", c.budget_nodes, "Search node limit per solver call")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--budget-secs", c.budget_secs, "Wall-clock limit per solver call, seconds")
      ->check(CLI::PositiveNumber);
}

void add_input_format(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Input format")
      ->check(CLI::IsMember({"auto", "graph6", "json"}))
      ->capture_default_str();
}

// gen

struct GenArgs {
  std::string family;
  std::vector<std::uint64_t> params;
  std::uint64_t seed = 1;
  std::string format = "graph6";
  bool pad = false;
};

std::uint64_t param(const GenArgs& a, std::size_t i, const char* usage) {
  if (i >= a.params.size()) throw InputError(std::string("usage: gen ") + usage);
  return a.params[i];
}

tfsub::Graph generate(const GenArgs& a) {
  using namespace tfsub;
  const auto& f = a.family;
  if (f == "cycle") return gen_cycle(param(a, 0, "cycle N"));
  if (f == "path") return gen_path(param(a, 0, "path N"));
  if (f == "complete") return gen_complete(param(a, 0, "complete N"));
  if (f == "star") return gen_star(param(a, 0, "star LEAVES"));
  if (f == "bipartite") return gen_complete_bipartite(param(a, 0, "bipartite A B"), param(a, 1, "bipartite A B"));
  if (f == "petersen") return gen_petersen();
  if (f == "kneser") return gen_kneser(param(a, 0, "kneser N K"), param(a, 1, "kneser N K"));
  if (f == "mycielski") {
    // Iterated from K2: 1 gives C5, 2 the Grotzsch graph.
    Graph g = gen_complete(2);
    const auto k = param(a, 0, "mycielski ITERATIONS");
    if (k > 6) throw BadParameter("mycielski iterations must be at most 6");
    for (std::uint64_t i = 0; i < k; ++i) g = gen_mycielski(g);
    return g;
  }
  if (f == "random-mtf") return gen_random_mtf(param(a, 0, "random-mtf N"), a.seed);
  if (f == "synthetic-dsw") {
    return gen_synthetic_dsw(SyntheticDswSpec::all_pairs(param(a, 0, "synthetic-dsw D"), a.pad, a.seed)).graph;
  }
  throw InputError("unknown family '" + f + "'");
}

int run_gen(const GenArgs& a) {
  tfsub::Graph g;
  try {
    g = generate(a);
  } catch (const tfsub::Error& e) {
    throw InputError(e.what());
  }
  if (a.format == "json") {
    std::cout << tfsub::to_json_graph(g) << "\n";
  } else if (a.format == "dot") {
    std::cout << tfsub::to_dot(g, a.family);
  } else {
    std::cout << tfsub::to_graph6(g) << "\n";
  }
  return kFound;
}

// analyze

int run_analyze(const std::string& file, const Common& c) {
  const auto g = load(file, c.format);
  const auto report = tfsub::analyze(g, c.budget());
  if (c.text && !c.json) {
    std::cout << tfsub::analysis_to_text(report, use_color(c));
  } else {
    std::cout << tfsub::analysis_to_json(report) << "\n";
  }
  return report.budget_exceeded.empty() ? kFound : kBudget;
}

// pipeline

struct SearchArgs {
  std::string host;
  std::string pattern;
  std::string dot_out;
  bool cross_check = false;
  bool induced = false;
};

int run_pipeline_cmd(const SearchArgs& s, const Common& c) {
  const auto g = load(s.host, c.format);
  const auto f = load(s.pattern, c.format);
  tfsub::PipelineOptions opts;
  opts.budget = c.budget();
  opts.cross_check = s.cross_check;
  tfsub::PipelineReport r;
  try {
    r = tfsub::run_pipeline(g, f, opts);
  } catch (const tfsub::NotMaximalTriangleFree& e) {
    throw InputError(s.host + ": " + e.what());
  } catch (const tfsub::BadParameter& e) {
    throw InputError(e.what());
  }
  if (c.json) {
    std::cout << tfsub::pipeline_to_json(r) << "\n";
  } else {
    std::cout << tfsub::pipeline_to_text(r, use_color(c));
  }
  if (!s.dot_out.empty() && r.witness()) write_file(s.dot_out, tfsub::witness_to_dot(*r.witness()));
  switch (r.verdict) {
    case tfsub::Verdict::kRouteSuccess:
    case tfsub::Verdict::kFallbackSuccess: return kFound;
    case tfsub::Verdict::kNotFound: return kNotFound;
    case tfsub::Verdict::kBudgetExceeded: return kBudget;
  }
  return kNotFound;
}

// find-subdivision

int run_find(const SearchArgs& s, const Common& c) {
  const auto g = load(s.host, c.format);
  const auto f = load(s.pattern, c.format);
  std::optional<tfsub::SubdivisionWitness> w;
  try {
    w = tfsub::find_subdivision(f, g, s.induced, c.budget());
  } catch (const tfsub::BudgetExceeded& e) {
    if (c.json) {
      std::cout << R"({"found":null,"budget_exceeded":true,"witness":null})" << "\n";
    } else {
      std::cout << "budget exceeded: " << e.what() << "\n";
    }
    return kBudget;
  }
  if (c.json) {
    std::cout << R"({"found":)" << (w ? "true" : "false") << R"(,"budget_exceeded":false,"witness":)"
              << (w ? tfsub::witness_to_json(*w) : "null") << "}\n";
  } else if (w) {
    std::cout << (s.induced ? "induced subdivision found\n" : "subdivision found\n");
    std::cout << "branch vertices";
    for (auto b : w->branch_map) std::cout << " " << b;
    std::cout << "\n";
    for (const auto& p : w->paths) {
      std::cout << "  path";
      for (auto v : p) std::cout << " " << v;
      std::cout << "\n";
    }
  } else {
    std::cout << "no subdivision (exhaustive)\n";
  }
  if (!s.dot_out.empty() && w) write_file(s.dot_out, tfsub::witness_to_dot(*w));
  return w ? kFound : kNotFound;
}

// hypergraph

int run_hypergraph(const std::string& file, bool dsw_max, const Common& c) {
  const auto g = load(file, c.format);
  if (g.order() == 0) throw InputError(file + ": graph has no vertices");
  const auto h = tfsub::neighborhood_hypergraph(g);
  const auto budget = c.budget();
  std::size_t packing = 0;
  tfsub::Transversal t;
  std::optional<std::size_t> dmax;
  std::optional<tfsub::DswStructure> structure;
  try {
    packing = tfsub::packing_number(h, budget);
    t = tfsub::transversality(h, budget);
    if (dsw_max) {
      dmax = tfsub::max_dsw_size(h, budget);
      if (*dmax >= 2) structure = tfsub::find_dsw_structure(h, *dmax, budget);
    }
  } catch (const tfsub::BudgetExceeded& e) {
    std::cerr << "tfsub: budget exceeded: " << e.what() << "\n";
    return kBudget;
  }
  std::cout << tfsub::hypergraph_summary_to_json(h, packing, t, dmax, structure) << "\n";
  return kFound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal triangle-free graphs and induced subdivisions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tfsub 0.1.0");
  Common common;

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph and print it");
  gen_cmd->add_option("family", gen.family,
                      "cycle, path, complete, star, bipartite, petersen, kneser, mycielski, random-mtf, "
                      "synthetic-dsw")
      ->required();
  gen_cmd->add_option("params", gen.params, "Family parameters");
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  gen_cmd->add_flag("--pad", gen.pad, "synthetic-dsw: pad to a maximal triangle-free host");
  gen_cmd->add_option("--format", gen.format, "Output format")
      ->check(CLI::IsMember({"graph6", "json", "dot"}))
      ->capture_default_str();

  std::string analyze_file;
  auto* analyze_cmd = app.add_subcommand("analyze", "Report exact invariants of a graph");
  analyze_cmd->add_option("file", analyze_file, "Graph file, or - for stdin")->required();
  analyze_cmd->add_flag("--json", common.json, "Emit JSON (the default)");
  analyze_cmd->add_flag("--text", common.text, "Emit an aligned text table instead of JSON");
  analyze_cmd->add_flag("--no-color", common.no_color, "Disable ANSI colors");
  add_input_format(analyze_cmd, common);
  add_budget(analyze_cmd, common);

  SearchArgs search;
  auto* pipeline_cmd = app.add_subcommand("pipeline", "Run the staged induced-subdivision search");
  pipeline_cmd->add_option("host", search.host, "Maximal triangle-free host, or - for stdin")->required();
  pipeline_cmd->add_option("--pattern", search.pattern, "Pattern graph file")->required();
  pipeline_cmd->add_flag("--cross-check", search.cross_check, "Also run the direct search");
  pipeline_cmd->add_flag("--json", common.json, "Emit JSON");
  pipeline_cmd->add_flag("--no-color", common.no_color, "Disable ANSI colors");
  pipeline_cmd->add_option("--dot-out", search.dot_out, "Write the witness as DOT");
  add_input_format(pipeline_cmd, common);
  add_budget(pipeline_cmd, common);

  auto* find_cmd = app.add_subcommand("find-subdivision", "Search for a (induced) subdivision");
  find_cmd->add_option("host", search.host, "Host graph file, or - for stdin")->required();
  find_cmd->add_option("--pattern", search.pattern, "Pattern graph file")->required();
  find_cmd->add_flag("--induced", search.induced, "Require an induced subdivision");
  find_cmd->add_flag("--json", common.json, "Emit JSON");
  find_cmd->add_option("--dot-out", search.dot_out, "Write the witness as DOT");
  add_input_format(find_cmd, common);
  add_budget(find_cmd, common);

  std::string hyper_file;
  bool dsw_max = false;
  auto* hyper_cmd = app.add_subcommand("hypergraph", "Closed-neighborhood hypergraph summary (JSON)");
  hyper_cmd->add_option("file", hyper_file, "Graph file, or - for stdin")->required();
  hyper_cmd->add_flag("--dsw-max", dsw_max, "Also compute the largest private-witness structure");
  add_input_format(hyper_cmd, common);
  add_budget(hyper_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*analyze_cmd) return run_analyze(analyze_file, common);
    if (*pipeline_cmd) return run_pipeline_cmd(search, common);
    if (*find_cmd) return run_find(search, common);
    if (*hyper_cmd) return run_hypergraph(hyper_file, dsw_max, common);
  } catch (const InputError& e) {
    std::cerr << "tfsub: error: " << e.what() << "\n";
    return kInputError;
  } catch (const tfsub::BudgetExceeded& e) {
    std::cerr << "tfsub: budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const tfsub::Error& e) {
    std::cerr << "tfsub: error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
