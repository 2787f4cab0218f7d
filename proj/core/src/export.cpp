#include "orgknow/export.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <vector>

#include "json.hpp"

#include "orgknow/csv.hpp"

namespace orgknow {

namespace {

std::string xml_escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

std::string xml_unescape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size();) {
        if (text[i] != '&') {
            out.push_back(text[i]);
            ++i;
            continue;
        }
        auto starts = [&](std::string_view entity) {
            return text.substr(i).starts_with(entity);
        };
        if (starts("&amp;")) {
            out.push_back('&');
            i += 5;
        } else if (starts("&lt;")) {
            out.push_back('<');
            i += 4;
        } else if (starts("&gt;")) {
            out.push_back('>');
            i += 4;
        } else if (starts("&quot;")) {
            out.push_back('"');
            i += 6;
        } else if (starts("&apos;")) {
            out.push_back('\'');
            i += 6;
        } else {
            throw InputError("graphml: unknown XML entity near '" +
                             std::string(text.substr(i, 8)) + "'");
        }
    }
    return out;
}

bool identifier_like(std::string_view name) {
    if (name.empty() || std::isdigit(static_cast<unsigned char>(name.front()))) {
        return false;
    }
    return std::all_of(name.begin(), name.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

void require_attribute_nodes(const DirectedWeightedGraph& graph,
                             const NodeAttributes& attributes) {
    for (const auto& [id, attrs] : attributes) {
        if (!graph.has_node(id)) {
            throw UnknownNodeError("attributes reference node " + std::to_string(id) +
                                   " which is not in the graph");
        }
    }
}

/// Iterates stored edges once per logical edge: every ordered pair for
/// directed graphs, only source < target for undirected views.
template <typename Fn>
void for_each_logical_edge(const DirectedWeightedGraph& graph, Fn&& fn) {
    for (NodeId source : graph.nodes()) {
        for (const auto& [target, weight] : graph.out_edges(source)) {
            if (graph.is_undirected() && source > target) {
                continue;
            }
            fn(source, target, weight);
        }
    }
}

// --- graphml ---

std::string write_graphml(const DirectedWeightedGraph& graph, const NodeAttributes& attributes) {
    std::set<std::string> attr_names;
    for (const auto& [id, attrs] : attributes) {
        for (const auto& [name, value] : attrs) {
            attr_names.insert(name);
        }
    }
    std::map<std::string, std::string> key_of;
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
    std::size_t index = 0;
    for (const std::string& name : attr_names) {
        std::string key = "d" + std::to_string(index++);
        key_of.emplace(name, key);
        out += "  <key id=\"" + key + "\" for=\"node\" attr.name=\"" + xml_escape(name) +
               "\" attr.type=\"double\"/>\n";
    }
    out += "  <key id=\"w\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n";
    out += std::string("  <graph id=\"G\" edgedefault=\"") +
           (graph.is_undirected() ? "undirected" : "directed") + "\">\n";
    for (NodeId id : graph.nodes()) {
        auto it = attributes.find(id);
        if (it == attributes.end() || it->second.empty()) {
            out += "    <node id=\"n" + std::to_string(id) + "\"/>\n";
            continue;
        }
        out += "    <node id=\"n" + std::to_string(id) + "\">\n";
        for (const auto& [name, value] : it->second) {
            out += "      <data key=\"" + key_of.at(name) + "\">" + format_double(value) +
                   "</data>\n";
        }
        out += "    </node>\n";
    }
    for_each_logical_edge(graph, [&out](NodeId source, NodeId target, double weight) {
        out += "    <edge source=\"n" + std::to_string(source) + "\" target=\"n" +
               std::to_string(target) + "\">\n";
        out += "      <data key=\"w\">" + format_double(weight) + "</data>\n";
        out += "    </edge>\n";
    });
    out += "  </graph>\n";
    out += "</graphml>\n";
    return out;
}

/// Minimal scanner for the GraphML subset written above.
class XmlScanner {
public:
    explicit XmlScanner(const std::string& text) : text_(text) {}

    struct Tag {
        std::string name;
        std::map<std::string, std::string> attrs;
        bool closing = false;
        bool self_closing = false;
    };

    /// Next tag, skipping the XML declaration, comments, and text content.
    bool next(Tag& tag) {
        while (true) {
            std::size_t start = text_.find('<', pos_);
            if (start == std::string::npos) {
                return false;
            }
            if (text_.compare(start, 2, "<?") == 0) {
                pos_ = advance_past(start, "?>");
                continue;
            }
            if (text_.compare(start, 4, "<!--") == 0) {
                pos_ = advance_past(start, "-->");
                continue;
            }
            std::size_t end = text_.find('>', start);
            if (end == std::string::npos) {
                throw InputError("graphml: unterminated tag");
            }
            parse_tag(text_.substr(start + 1, end - start - 1), tag);
            pos_ = end + 1;
            return true;
        }
    }

    /// Text content between the current position and the next '<'.
    std::string text_until_tag() {
        std::size_t start = pos_;
        std::size_t end = text_.find('<', pos_);
        if (end == std::string::npos) {
            throw InputError("graphml: missing closing tag");
        }
        pos_ = end;
        return text_.substr(start, end - start);
    }

private:
    std::size_t advance_past(std::size_t from, std::string_view sentinel) {
        std::size_t at = text_.find(sentinel, from);
        if (at == std::string::npos) {
            throw InputError("graphml: unterminated construct");
        }
        return at + sentinel.size();
    }

    static void parse_tag(std::string body, Tag& tag) {
        tag = Tag{};
        if (!body.empty() && body.front() == '/') {
            tag.closing = true;
            body.erase(0, 1);
        }
        if (!body.empty() && body.back() == '/') {
            tag.self_closing = true;
            body.pop_back();
        }
        std::size_t i = 0;
        while (i < body.size() && !std::isspace(static_cast<unsigned char>(body[i]))) {
            ++i;
        }
        tag.name = body.substr(0, i);
        while (i < body.size()) {
            while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) {
                ++i;
            }
            if (i >= body.size()) {
                break;
            }
            std::size_t eq = body.find('=', i);
            if (eq == std::string::npos) {
                throw InputError("graphml: malformed attribute in <" + tag.name + ">");
            }
            std::string name = body.substr(i, eq - i);
            std::size_t quote_open = eq + 1;
            if (quote_open >= body.size() || body[quote_open] != '"') {
                throw InputError("graphml: attribute value must be quoted in <" + tag.name + ">");
            }
            std::size_t quote_close = body.find('"', quote_open + 1);
            if (quote_close == std::string::npos) {
                throw InputError("graphml: unterminated attribute value in <" + tag.name + ">");
            }
            tag.attrs[name] = xml_unescape(
                std::string_view(body).substr(quote_open + 1, quote_close - quote_open - 1));
            i = quote_close + 1;
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

NodeId parse_graphml_node_id(const std::string& raw) {
    if (raw.size() < 2 || raw.front() != 'n') {
        throw InputError("graphml: node id '" + raw + "' does not match n<number>");
    }
    NodeId id = 0;
    auto [ptr, ec] = std::from_chars(raw.data() + 1, raw.data() + raw.size(), id);
    if (ec != std::errc() || ptr != raw.data() + raw.size() || id == 0) {
        throw InputError("graphml: node id '" + raw + "' does not match n<number>");
    }
    return id;
}

double parse_double_text(const std::string& text, const char* what) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw InputError(std::string("graphml: malformed ") + what + " value '" + text + "'");
    }
    return value;
}

std::string required_attr(const XmlScanner::Tag& tag, const char* name) {
    auto it = tag.attrs.find(name);
    if (it == tag.attrs.end()) {
        throw InputError("graphml: <" + tag.name + "> is missing attribute '" + name + "'");
    }
    return it->second;
}

double read_data_value(XmlScanner& scanner, const char* what) {
    double value = parse_double_text(scanner.text_until_tag(), what);
    XmlScanner::Tag close;
    if (!scanner.next(close) || !close.closing || close.name != "data") {
        throw InputError("graphml: <data> element is not closed");
    }
    return value;
}

ImportedGraph read_graphml(const std::string& bytes) {
    XmlScanner scanner(bytes);
    XmlScanner::Tag tag;
    std::map<std::string, std::string> node_attr_names; // key id -> attribute name
    std::string weight_key;
    bool undirected = false;
    bool in_graph = false;

    DirectedWeightedGraph directed;
    NodeAttributes attributes;
    struct PendingEdge {
        NodeId source;
        NodeId target;
        double weight;
    };
    std::vector<PendingEdge> edges;

    while (scanner.next(tag)) {
        if (tag.closing) {
            continue;
        }
        if (tag.name == "key") {
            std::string id = required_attr(tag, "id");
            std::string target = required_attr(tag, "for");
            std::string attr_name = required_attr(tag, "attr.name");
            if (target == "node") {
                node_attr_names[id] = attr_name;
            } else if (target == "edge" && attr_name == "weight") {
                weight_key = id;
            }
        } else if (tag.name == "graph") {
            undirected = required_attr(tag, "edgedefault") == "undirected";
            in_graph = true;
        } else if (tag.name == "node") {
            if (!in_graph) {
                throw InputError("graphml: <node> outside <graph>");
            }
            NodeId id = parse_graphml_node_id(required_attr(tag, "id"));
            directed.add_node(id);
            if (tag.self_closing) {
                continue;
            }
            XmlScanner::Tag inner;
            while (scanner.next(inner)) {
                if (inner.closing && inner.name == "node") {
                    break;
                }
                if (inner.name != "data" || inner.closing) {
                    throw InputError("graphml: unexpected <" + inner.name + "> inside <node>");
                }
                std::string key = required_attr(inner, "key");
                auto name_it = node_attr_names.find(key);
                if (name_it == node_attr_names.end()) {
                    throw InputError("graphml: <data> references undeclared key '" + key + "'");
                }
                attributes[id][name_it->second] = read_data_value(scanner, "attribute");
            }
        } else if (tag.name == "edge") {
            if (!in_graph) {
                throw InputError("graphml: <edge> outside <graph>");
            }
            PendingEdge edge{parse_graphml_node_id(required_attr(tag, "source")),
                             parse_graphml_node_id(required_attr(tag, "target")), 1.0};
            if (!tag.self_closing) {
                XmlScanner::Tag inner;
                while (scanner.next(inner)) {
                    if (inner.closing && inner.name == "edge") {
                        break;
                    }
                    if (inner.name != "data" || inner.closing) {
                        throw InputError("graphml: unexpected <" + inner.name +
                                         "> inside <edge>");
                    }
                    if (required_attr(inner, "key") != weight_key) {
                        throw InputError("graphml: edge <data> must carry the weight key");
                    }
                    edge.weight = read_data_value(scanner, "weight");
                }
            }
            edges.push_back(edge);
        }
    }
    if (!in_graph) {
        throw InputError("graphml: no <graph> element found");
    }
    for (const PendingEdge& edge : edges) {
        directed.add_edge(edge.source, edge.target, edge.weight);
    }
    ImportedGraph imported;
    imported.graph = undirected ? directed.symmetrize() : std::move(directed);
    imported.attributes = std::move(attributes);
    return imported;
}

// --- json ---

std::string write_json(const DirectedWeightedGraph& graph, const NodeAttributes& attributes) {
    nlohmann::json doc;
    doc["directed"] = !graph.is_undirected();
    nlohmann::json nodes = nlohmann::json::array();
    for (NodeId id : graph.nodes()) {
        nlohmann::json attrs = nlohmann::json::object();
        auto it = attributes.find(id);
        if (it != attributes.end()) {
            for (const auto& [name, value] : it->second) {
                attrs[name] = value;
            }
        }
        nodes.push_back({{"id", id}, {"attributes", std::move(attrs)}});
    }
    doc["nodes"] = std::move(nodes);
    nlohmann::json adjacency = nlohmann::json::array();
    for (NodeId source : graph.nodes()) {
        nlohmann::json out_edges = nlohmann::json::array();
        for (const auto& [target, weight] : graph.out_edges(source)) {
            if (graph.is_undirected() && source > target) {
                continue;
            }
            out_edges.push_back({{"target", target}, {"weight", weight}});
        }
        adjacency.push_back({{"source", source}, {"edges", std::move(out_edges)}});
    }
    doc["adjacency"] = std::move(adjacency);
    return doc.dump(2) + "\n";
}

ImportedGraph read_json(const std::string& bytes) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(bytes);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("json graph: ") + e.what());
    }
    try {
        DirectedWeightedGraph directed;
        NodeAttributes attributes;
        for (const auto& node : doc.at("nodes")) {
            NodeId id = node.at("id").get<NodeId>();
            directed.add_node(id);
            auto attrs = node.at("attributes");
            for (auto it = attrs.begin(); it != attrs.end(); ++it) {
                attributes[id][it.key()] = it.value().get<double>();
            }
        }
        for (const auto& entry : doc.at("adjacency")) {
            NodeId source = entry.at("source").get<NodeId>();
            for (const auto& edge : entry.at("edges")) {
                directed.add_edge(source, edge.at("target").get<NodeId>(),
                                  edge.at("weight").get<double>());
            }
        }
        ImportedGraph imported;
        bool directed_flag = doc.at("directed").get<bool>();
        imported.graph = directed_flag ? std::move(directed) : directed.symmetrize();
        imported.attributes = std::move(attributes);
        return imported;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("json graph: ") + e.what());
    }
}

// --- dot ---

std::string dot_attr_name(const std::string& name) {
    return identifier_like(name) ? name : "\"" + name + "\"";
}

std::string write_dot(const DirectedWeightedGraph& graph, const NodeAttributes& attributes) {
    const bool undirected = graph.is_undirected();
    std::string out = undirected ? "graph knowledge_network {\n" : "digraph knowledge_network {\n";
    for (NodeId id : graph.nodes()) {
        out += "  " + std::to_string(id) + " [label=\"" + std::to_string(id) + "\"";
        auto it = attributes.find(id);
        if (it != attributes.end()) {
            for (const auto& [name, value] : it->second) {
                out += " " + dot_attr_name(name) + "=" + format_double(value);
            }
            auto size = it->second.find("size");
            if (size != it->second.end()) {
                // Node area scales with the size attribute.
                out += " width=" + format_double(0.5 + size->second);
            }
        }
        out += "];\n";
    }
    const char* arrow = undirected ? " -- " : " -> ";
    for_each_logical_edge(graph, [&out, arrow](NodeId source, NodeId target, double weight) {
        out += "  " + std::to_string(source) + arrow + std::to_string(target) + " [weight=" +
               format_double(weight) + " label=\"" + format_double(weight) + "\"];\n";
    });
    out += "}\n";
    return out;
}

// --- csv edge list ---

std::string write_csv_edges(const DirectedWeightedGraph& graph) {
    std::string out = "source,target,weight\n";
    for_each_logical_edge(graph, [&out](NodeId source, NodeId target, double weight) {
        out += std::to_string(source) + "," + std::to_string(target) + "," +
               format_double(weight) + "\n";
    });
    return out;
}

} // namespace

GraphFormat parse_format_name(std::string_view name) {
    if (name == "graphml") {
        return GraphFormat::graphml;
    }
    if (name == "dot") {
        return GraphFormat::dot;
    }
    if (name == "json") {
        return GraphFormat::json;
    }
    if (name == "csv") {
        return GraphFormat::csv;
    }
    throw UnsupportedFormatError("unsupported graph format '" + std::string(name) +
                                 "' (expected graphml, dot, json, or csv)");
}

std::string format_name(GraphFormat format) {
    switch (format) {
    case GraphFormat::graphml: return "graphml";
    case GraphFormat::dot: return "dot";
    case GraphFormat::json: return "json";
    case GraphFormat::csv: return "csv";
    }
    return {};
}

ExportedGraph export_graph(const DirectedWeightedGraph& graph, const NodeAttributes& attributes,
                           GraphFormat format) {
    require_attribute_nodes(graph, attributes);
    switch (format) {
    case GraphFormat::graphml: return {format, write_graphml(graph, attributes)};
    case GraphFormat::json: return {format, write_json(graph, attributes)};
    case GraphFormat::dot: return {format, write_dot(graph, attributes)};
    case GraphFormat::csv: return {format, write_csv_edges(graph)};
    }
    throw UnsupportedFormatError("unsupported graph format");
}

ImportedGraph import_graph(const std::string& bytes, GraphFormat format) {
    switch (format) {
    case GraphFormat::graphml: return read_graphml(bytes);
    case GraphFormat::json: return read_json(bytes);
    case GraphFormat::dot:
    case GraphFormat::csv:
        throw UnsupportedFormatError("import supports graphml and json only, not " +
                                     format_name(format));
    }
    throw UnsupportedFormatError("unsupported graph format");
}

} // namespace orgknow
