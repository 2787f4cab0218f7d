#pragma once

#include <map>
#include <string>
#include <string_view>

#include "orgknow/graph.hpp"

namespace orgknow {

enum class GraphFormat { graphml, dot, json, csv };

/// Parses "graphml" | "dot" | "json" | "csv"; anything else raises
/// UnsupportedFormatError.
GraphFormat parse_format_name(std::string_view name);
std::string format_name(GraphFormat format);

using AttributeMap = std::map<std::string, double>;
using NodeAttributes = std::map<NodeId, AttributeMap>;

struct ExportedGraph {
    GraphFormat format;
    std::string bytes;
};

/// Serializes the graph with per-node attributes. Element ordering is
/// deterministic (nodes by id, edges by source then target) so identical
/// graphs always produce byte-identical output. Attribute keys must refer
/// to nodes of the graph. Undirected views are written with each pair
/// listed once.
ExportedGraph export_graph(const DirectedWeightedGraph& graph, const NodeAttributes& attributes,
                           GraphFormat format);

struct ImportedGraph {
    DirectedWeightedGraph graph;
    NodeAttributes attributes;
};

/// Reads a graph back from graphml or json bytes (the two lossless
/// round-trip formats). dot and csv raise UnsupportedFormatError.
ImportedGraph import_graph(const std::string& bytes, GraphFormat format);

} // namespace orgknow
