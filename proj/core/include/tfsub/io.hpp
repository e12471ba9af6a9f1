#pragma once

#include <string>
#include <string_view>

#include "tfsub/graph.hpp"
#include "tfsub/hypergraph.hpp"
#include "tfsub/pipeline.hpp"
#include "tfsub/subdivision.hpp"

namespace tfsub {

enum class GraphFormat { kGraph6, kJson, kDot };

/// graph6: optional ">>graph6<<" header, N(n) in 1, 4 or 8 bytes, then the
/// upper triangle column by column, six bits per byte, zero padded. A single
/// trailing newline is accepted. Throws ParseError with the byte offset.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 without header or newline.
std::string to_graph6(const Graph& g);

/// {"n": int, "edges": [[u, v], ...]} with optional "labels". Edge order is
/// free on input; self-loops, duplicates and out-of-range endpoints raise
/// RangeError.
Graph parse_json_graph(std::string_view text);

/// Canonical form: edges with u < v, sorted, no duplicates.
std::string to_json_graph(const Graph& g);

/// '{' after leading whitespace selects JSON, anything else graph6.
GraphFormat sniff_format(std::string_view text);

/// Parses in the given format; DOT is export-only and rejected.
Graph parse_graph(std::string_view text, GraphFormat format);
Graph parse_graph(std::string_view text);

std::string to_dot(const Graph& g, std::string_view name = "G");

/// Host graph with branch vertices, path interiors and unused vertices in
/// three distinct colors and witness edges drawn bold.
std::string witness_to_dot(const SubdivisionWitness& w);

// JSON documents. Field order is fixed and every key is always present.
std::string witness_to_json(const SubdivisionWitness& w, int indent = -1);
std::string analysis_to_json(const AnalysisReport& a, int indent = 2);
std::string pipeline_to_json(const PipelineReport& r, int indent = 2);
std::string bounds_to_json(const BoundsReport& b, int indent = 2);
std::string hypergraph_summary_to_json(const Hypergraph& h, std::size_t packing,
                                       const Transversal& t,
                                       const std::optional<std::size_t>& dsw_max,
                                       const std::optional<DswStructure>& structure,
                                       int indent = 2);

// Human-readable text.
std::string analysis_to_text(const AnalysisReport& a, bool color);
std::string pipeline_to_text(const PipelineReport& r, bool color);

}  // namespace tfsub
