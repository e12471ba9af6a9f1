#include <set>

#include <json.hpp>

#include "tfsub/errors.hpp"
#include "tfsub/io.hpp"

namespace tfsub {

using ordered_json = nlohmann::ordered_json;

namespace {

template <typename T>
ordered_json or_null(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json rational_json(const std::optional<Rational>& r) {
  if (!r) return nullptr;
  return ordered_json{{"num", r->num}, {"den", r->den}, {"value", r->to_double()}};
}

ordered_json vertex_set_json(const VertexSet& s) { return ordered_json(s.members()); }

ordered_json witness_json(const SubdivisionWitness& w) {
  ordered_json pattern_edges = ordered_json::array();
  for (const auto& [u, v] : w.pattern.edges()) pattern_edges.push_back({u, v});
  ordered_json paths = ordered_json::array();
  for (const auto& p : w.paths) paths.push_back(p);
  return ordered_json{{"induced", w.induced},
                      {"pattern_order", w.pattern.order()},
                      {"host_order", w.host.order()},
                      {"branch_map", w.branch_map},
                      {"pattern_edges", pattern_edges},
                      {"paths", paths},
                      {"used_vertices", vertex_set_json(w.used_vertices())}};
}

ordered_json optional_witness(const std::optional<SubdivisionWitness>& w) {
  return w ? witness_json(*w) : ordered_json(nullptr);
}

ordered_json witnesses_json(const PairWitnesses& w) {
  ordered_json out = ordered_json::array();
  for (const auto& [pair, y] : w) out.push_back({{"i", pair.first}, {"j", pair.second}, {"y", y}});
  return out;
}

ordered_json dsw_json(const std::optional<DswStructure>& s) {
  if (!s) return nullptr;
  return ordered_json{{"d", s->d()}, {"edge_indices", s->edge_indices}, {"witnesses", witnesses_json(s->witnesses)}};
}

ordered_json stage_json(const StageRecord& s) {
  return ordered_json{{"status", to_string(s.status)},
                      {"reason", s.reason.empty() ? ordered_json(nullptr) : ordered_json(s.reason)}};
}

ordered_json bounds_json(const BoundsReport& b) {
  return ordered_json{{"l", b.l},
                      {"mader_avg_degree", b.mader_avg_degree},
                      {"log_threshold", b.log_threshold},
                      {"derived_log_order_required", b.derived_log_order_required},
                      {"dsw_log_d_required", b.dsw_log_d_required},
                      {"chi_constant", b.chi_constant},
                      {"chi_threshold_formula", b.chi_threshold_formula},
                      {"chi_threshold_note", "one valid instantiation"},
                      {"derivation", b.derivation}};
}

ordered_json graph_json(const Graph& g) {
  ordered_json edges = ordered_json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return ordered_json{{"n", g.order()}, {"edges", edges}};
}

}  // namespace

Graph parse_json_graph(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte == 0 ? 0 : e.byte - 1, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError(0, "JSON graph must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_unsigned()) {
    if (doc.contains("n") && doc["n"].is_number_integer()) throw RangeError("vertex count must be non-negative");
    throw ParseError(0, "JSON graph needs an unsigned integer field \"n\"");
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw ParseError(0, "JSON graph needs an array field \"edges\"");
  }
  const auto n = doc["n"].get<std::uint64_t>();
  if (n > 20000) throw RangeError("vertex count " + std::to_string(n) + " exceeds supported maximum");
  Graph g(n);
  std::set<Edge> seen;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw ParseError(0, "each edge must be a pair of integers, got " + e.dump());
    }
    const auto a = e[0].get<std::int64_t>();
    const auto b = e[1].get<std::int64_t>();
    if (a < 0 || b < 0 || static_cast<std::uint64_t>(a) >= n || static_cast<std::uint64_t>(b) >= n) {
      throw RangeError("edge " + e.dump() + " has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (a == b) throw RangeError("edge " + e.dump() + " is a self-loop");
    const Edge key{static_cast<Vertex>(std::min(a, b)), static_cast<Vertex>(std::max(a, b))};
    if (!seen.insert(key).second) throw RangeError("edge " + e.dump() + " is repeated");
    g.add_edge(key.first, key.second);
  }
  if (doc.contains("labels") && !doc["labels"].is_null()) {
    if (!doc["labels"].is_array()) throw ParseError(0, "\"labels\" must be an array of strings");
    std::vector<std::string> labels;
    for (const auto& l : doc["labels"]) {
      if (!l.is_string()) throw ParseError(0, "\"labels\" must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
    if (labels.size() != n) throw RangeError("label count does not match n");
    g.set_labels(std::move(labels));
  }
  return g;
}

std::string to_json_graph(const Graph& g) {
  auto doc = graph_json(g);
  if (!g.labels().empty()) doc["labels"] = g.labels();
  return doc.dump();
}

GraphFormat sniff_format(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{' ? GraphFormat::kJson : GraphFormat::kGraph6;
  }
  return GraphFormat::kGraph6;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::kGraph6: {
      // Tolerate surrounding whitespace; offsets stay relative to the input.
      const auto first = text.find_first_not_of(" \t\r\n");
      if (first == std::string_view::npos) throw ParseError(0, "input is empty");
      const auto last = text.find_last_not_of(" \t\r\n");
      try {
        return parse_graph6(text.substr(first, last - first + 1));
      } catch (const ParseError& e) {
        throw ParseError(first + e.offset(), "invalid graph6");
      }
    }
    case GraphFormat::kJson:
      return parse_json_graph(text);
    case GraphFormat::kDot:
      throw BadParameter("DOT is an export-only format");
  }
  throw BadParameter("unknown graph format");
}

Graph parse_graph(std::string_view text) { return parse_graph(text, sniff_format(text)); }

std::string witness_to_json(const SubdivisionWitness& w, int indent) {
  return witness_json(w).dump(indent);
}

std::string bounds_to_json(const BoundsReport& b, int indent) { return bounds_json(b).dump(indent); }

std::string analysis_to_json(const AnalysisReport& a, int indent) {
  ordered_json doc{
      {"n", a.n},
      {"m", a.m},
      {"min_degree", or_null(a.min_degree)},
      {"max_degree", or_null(a.max_degree)},
      {"avg_degree", rational_json(a.avg_degree)},
      {"min_degree_ratio", rational_json(a.min_degree_ratio)},
      {"triangle_free", a.triangle_free},
      {"maximal_triangle_free", a.maximal_triangle_free},
      {"chromatic_number", or_null(a.chromatic_number)},
      {"clique_number", or_null(a.clique_number)},
      {"independence_number", or_null(a.independence_number)},
      {"packing_number", or_null(a.packing_number)},
      {"transversality", or_null(a.transversality)},
      {"transversal", a.transversal ? vertex_set_json(*a.transversal) : ordered_json(nullptr)},
      {"max_dsw_size", or_null(a.max_dsw_size)},
      {"chi_le_two_tau", or_null(a.chi_le_two_tau)},
      {"budget_exceeded", a.budget_exceeded},
  };
  return doc.dump(indent);
}

std::string pipeline_to_json(const PipelineReport& r, int indent) {
  std::vector<Vertex> s_vertices;
  for (auto p : r.s_positions) s_vertices.push_back(r.x[p]);
  ordered_json y_all = ordered_json::array();
  for (const auto& [pair, y] : r.surviving) y_all.push_back(y);

  ordered_json doc{
      {"verdict", to_string(r.verdict)},
      {"host", {{"n", r.host_order}, {"m", r.host_size}}},
      {"pattern", {{"n", r.pattern_order}, {"m", r.pattern_size}}},
      {"bounds", bounds_json(r.bounds)},
      {"stages",
       {
           {"maximality", {{"record", stage_json(r.maximality)}, {"maximal_triangle_free", r.maximal_triangle_free}}},
           {"hypergraph",
            {{"record", stage_json(r.hypergraph)},
             {"packing_number", or_null(r.packing)},
             {"transversality", or_null(r.transversality)},
             {"transversal", r.transversal ? vertex_set_json(*r.transversal) : ordered_json(nullptr)},
             {"chromatic_number", or_null(r.chromatic)},
             {"chi_le_two_tau", or_null(r.chi_le_two_tau)},
             {"star_coloring", r.star_coloring},
             {"star_coloring_proper", or_null(r.star_coloring_proper)}}},
           {"dsw", {{"record", stage_json(r.dsw)}, {"structure", dsw_json(r.structure)}, {"x", r.x}}},
           {"stable_x",
            {{"record", stage_json(r.stable_x)},
             {"s_positions", r.s_positions},
             {"s", s_vertices},
             {"size", r.s_positions.size()},
             {"benchmark_floor_sqrt_d", r.stable_x_benchmark}}},
           {"uniqueness",
            {{"record", stage_json(r.uniqueness)},
             {"surviving", witnesses_json(r.surviving)},
             {"discarded_pairs", r.discarded_pairs}}},
           {"stable_y",
            {{"record", stage_json(r.stable_y)},
             {"y", y_all},
             {"y_prime", vertex_set_json(r.y_prime)},
             {"size", r.y_prime.size()},
             {"benchmark_floor_sqrt_y", r.stable_y_benchmark}}},
           {"derived_graph",
            {{"record", stage_json(r.derived)},
             {"graph", r.derived_graph ? graph_json(*r.derived_graph) : ordered_json(nullptr)},
             {"avg_degree", rational_json(r.derived_avg_degree)},
             {"mader_avg_degree", r.bounds.mader_avg_degree}}},
           {"derived_search", {{"record", stage_json(r.derived_search)}, {"witness", optional_witness(r.derived_witness)}}},
           {"lift", {{"record", stage_json(r.lift)}, {"witness", optional_witness(r.lifted)}}},
           {"fallback", {{"record", stage_json(r.fallback)}, {"witness", optional_witness(r.fallback_witness)}}},
       }},
      {"witness", r.witness() ? witness_json(*r.witness()) : ordered_json(nullptr)},
  };
  return doc.dump(indent);
}

std::string hypergraph_summary_to_json(const Hypergraph& h, std::size_t packing, const Transversal& t,
                                       const std::optional<std::size_t>& dsw_max,
                                       const std::optional<DswStructure>& structure, int indent) {
  ordered_json edges = ordered_json::array();
  for (const auto& e : h.edges()) edges.push_back(e.members());
  ordered_json doc{
      {"ground_size", h.ground_size()},
      {"edge_count", h.edge_count()},
      {"edges", edges},
      {"packing_number", packing},
      {"transversality", t.size},
      {"transversal", vertex_set_json(t.witness)},
      {"max_dsw_size", or_null(dsw_max)},
      {"dsw_structure", dsw_json(structure)},
  };
  return doc.dump(indent);
}

}  // namespace tfsub
