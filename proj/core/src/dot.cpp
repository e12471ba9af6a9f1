#include <set>
#include <sstream>

#include "tfsub/io.hpp"

namespace tfsub {
namespace {

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string vertex_label(const Graph& g, Vertex v) {
  return g.labels().empty() ? std::to_string(v) : g.labels()[v];
}

}  // namespace

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream os;
  os << "graph " << quote(name) << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    os << "  " << v << " [label=" << quote(vertex_label(g, v)) << "];\n";
  }
  for (const auto& [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string witness_to_dot(const SubdivisionWitness& w) {
  const Graph& g = w.host;
  std::vector<int> role(g.order(), 0);
  for (const auto& p : w.paths)
    for (std::size_t i = 1; i + 1 < p.size(); ++i) role[p[i]] = 2;
  for (Vertex b : w.branch_map) role[b] = 1;
  std::set<Edge> used;
  for (const auto& p : w.paths)
    for (std::size_t i = 0; i + 1 < p.size(); ++i) used.emplace(std::min(p[i], p[i + 1]), std::max(p[i], p[i + 1]));

  std::ostringstream os;
  os << "graph witness {\n";
  os << "  node [style=filled];\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    static constexpr const char* kFill[] = {"white", "tomato", "gold"};
    static constexpr const char* kKind[] = {"unused", "branch", "interior"};
    os << "  " << v << " [label=" << quote(vertex_label(g, v)) << ", fillcolor=" << kFill[role[v]]
       << ", tooltip=" << quote(kKind[role[v]]) << "];\n";
  }
  for (const auto& e : g.edges()) {
    os << "  " << e.first << " -- " << e.second;
    if (used.contains(e)) {
      os << " [penwidth=3, color=black]";
    } else {
      os << " [color=gray70, style=dashed]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

namespace {

struct Palette {
  bool on;
  std::string wrap(std::string_view text, const char* code) const {
    if (!on) return std::string(text);
    return std::string("\x1b[") + code + "m" + std::string(text) + "\x1b[0m";
  }
  std::string status(StageStatus s) const {
    const auto text = to_string(s);
    switch (s) {
      case StageStatus::kOk: return wrap(text, "32");
      case StageStatus::kStalled: return wrap(text, "33");
      case StageStatus::kBudgetExceeded: return wrap(text, "31");
      case StageStatus::kSkipped: return wrap(text, "2");
    }
    return text;
  }
};

template <typename T>
std::string opt(const std::optional<T>& v) {
  if (!v) return "n/a";
  if constexpr (std::is_same_v<T, bool>) {
    return *v ? "yes" : "no";
  } else {
    return std::to_string(*v);
  }
}

std::string opt_rational(const std::optional<Rational>& r) { return r ? r->to_string() : "n/a"; }

std::string join(const std::vector<Vertex>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

}  // namespace

std::string analysis_to_text(const AnalysisReport& a, bool color) {
  const Palette pal{color};
  std::ostringstream os;
  os << "vertices              " << a.n << "\n"
     << "edges                 " << a.m << "\n"
     << "degree min/max/avg    " << opt(a.min_degree) << " / " << opt(a.max_degree) << " / "
     << opt_rational(a.avg_degree) << "\n"
     << "min degree / n        " << opt_rational(a.min_degree_ratio) << "\n"
     << "triangle-free         " << (a.triangle_free ? "yes" : "no") << "\n"
     << "maximal triangle-free " << (a.maximal_triangle_free ? "yes" : "no") << "\n"
     << "chromatic number      " << opt(a.chromatic_number) << "\n"
     << "clique number         " << opt(a.clique_number) << "\n"
     << "independence number   " << opt(a.independence_number) << "\n"
     << "packing number        " << opt(a.packing_number) << "\n"
     << "transversality        " << opt(a.transversality);
  if (a.transversal) os << "  " << join(a.transversal->members());
  os << "\n"
     << "max DSW size          " << opt(a.max_dsw_size) << "\n";
  if (a.chi_le_two_tau) {
    os << "chi <= 2*tau          "
       << (*a.chi_le_two_tau ? pal.wrap("holds", "32") : pal.wrap("VIOLATED", "31")) << "\n";
  }
  if (!a.budget_exceeded.empty()) {
    os << pal.wrap("budget exceeded:", "31");
    for (const auto& f : a.budget_exceeded) os << " " << f;
    os << "\n";
  }
  return os.str();
}

std::string pipeline_to_text(const PipelineReport& r, bool color) {
  const Palette pal{color};
  std::ostringstream os;
  const auto line = [&](int idx, const char* name, const StageRecord& s, const std::string& extra) {
    os << "(" << idx << ") " << name << ": " << pal.status(s.status);
    if (!s.reason.empty()) os << " [" << s.reason << "]";
    if (!extra.empty()) os << "  " << extra;
    os << "\n";
  };
  os << "host n=" << r.host_order << " m=" << r.host_size << ", pattern n=" << r.pattern_order
     << " m=" << r.pattern_size << "\n";
  os << "bounds: 512*l^2=" << r.bounds.mader_avg_degree << ", 256*l^2=" << r.bounds.log_threshold
     << ", " << r.bounds.chi_threshold_formula << "\n";
  line(1, "maximal triangle-free", r.maximality, "");
  line(2, "neighborhood hypergraph", r.hypergraph,
       "packing=" + opt(r.packing) + " tau=" + opt(r.transversality) + " chi=" + opt(r.chromatic) +
           " chi<=2tau=" + opt(r.chi_le_two_tau) + " star-coloring-proper=" + opt(r.star_coloring_proper));
  line(3, "DSW structure", r.dsw, r.structure ? "d=" + std::to_string(r.structure->d()) + " X=" + join(r.x) : "");
  line(4, "stable restriction of X", r.stable_x,
       "|S|=" + std::to_string(r.s_positions.size()) + " (floor(sqrt d)=" + std::to_string(r.stable_x_benchmark) + ")");
  line(5, "exact two-neighbor witnesses", r.uniqueness,
       "kept=" + std::to_string(r.surviving.size()) + " discarded=" + std::to_string(r.discarded_pairs));
  line(6, "stable Y'", r.stable_y,
       "|Y'|=" + std::to_string(r.y_prime.size()) + " (floor(sqrt |Y|)=" + std::to_string(r.stable_y_benchmark) + ")");
  line(7, "derived graph G'", r.derived,
       r.derived_graph ? "n=" + std::to_string(r.derived_graph->order()) + " m=" +
                             std::to_string(r.derived_graph->size()) + " avg=" + opt_rational(r.derived_avg_degree) +
                             " (needs " + std::to_string(r.bounds.mader_avg_degree) + ")"
                       : "");
  line(8, "subdivision in G'", r.derived_search, "");
  line(9, "lift to induced subdivision", r.lift, "");
  line(10, "direct induced search", r.fallback, "");
  const auto verdict = to_string(r.verdict);
  const bool good = r.verdict == Verdict::kRouteSuccess || r.verdict == Verdict::kFallbackSuccess;
  os << "verdict: " << pal.wrap(verdict, good ? "32" : "31") << "\n";
  if (const auto* w = r.witness()) {
    os << "witness branch vertices " << join(w->branch_map) << "\n";
    for (const auto& p : w->paths) os << "  path " << join(p) << "\n";
  }
  return os.str();
}

}  // namespace tfsub
