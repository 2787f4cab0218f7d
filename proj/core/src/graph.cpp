#include "orgknow/graph.hpp"

#include <string>
#include <utility>

namespace orgknow {

namespace {

std::string node_label(NodeId id) {
    return "node " + std::to_string(id);
}

} // namespace

void DirectedWeightedGraph::add_node(NodeId id) {
    if (id == 0) {
        throw InvalidNodeIdError("node ids must be >= 1");
    }
    auto [it, inserted] = nodes_.insert(id);
    if (inserted) {
        out_[id];
        in_[id];
    }
}

void DirectedWeightedGraph::add_edge(NodeId source, NodeId target, double weight) {
    if (source == target) {
        throw SelfLoopError("self-loop rejected at " + node_label(source));
    }
    if (!has_node(source)) {
        throw UnknownNodeError(node_label(source) + " is not in the graph");
    }
    if (!has_node(target)) {
        throw UnknownNodeError(node_label(target) + " is not in the graph");
    }
    if (!(weight > 0.0)) {
        throw InvalidWeightError("edge weight must be > 0, got " + std::to_string(weight));
    }
    auto [it, inserted] = out_[source].emplace(target, weight);
    if (!inserted) {
        throw DuplicateEdgeError("edge " + std::to_string(source) + "->" +
                                 std::to_string(target) + " already exists");
    }
    in_[target].emplace(source, weight);
    ++edge_count_;
}

void DirectedWeightedGraph::add_edge(const WeightedEdge& edge) {
    add_edge(edge.source, edge.target, edge.weight);
}

bool DirectedWeightedGraph::has_node(NodeId id) const {
    return nodes_.contains(id);
}

bool DirectedWeightedGraph::has_edge(NodeId source, NodeId target) const {
    auto it = out_.find(source);
    return it != out_.end() && it->second.contains(target);
}

double DirectedWeightedGraph::edge_weight(NodeId source, NodeId target) const {
    require_node(source);
    require_node(target);
    auto it = out_.find(source);
    auto edge = it->second.find(target);
    if (edge == it->second.end()) {
        throw UnknownNodeError("no edge " + std::to_string(source) + "->" + std::to_string(target));
    }
    return edge->second;
}

const DirectedWeightedGraph::AdjacencyMap& DirectedWeightedGraph::out_edges(NodeId id) const {
    require_node(id);
    return out_.find(id)->second;
}

const DirectedWeightedGraph::AdjacencyMap& DirectedWeightedGraph::in_edges(NodeId id) const {
    require_node(id);
    return in_.find(id)->second;
}

DegreeBreakdown DirectedWeightedGraph::degree(NodeId id) const {
    require_node(id);
    DegreeBreakdown d;
    d.in_degree = in_.find(id)->second.size();
    d.out_degree = out_.find(id)->second.size();
    d.total = d.in_degree + d.out_degree;
    return d;
}

WeightedDegreeBreakdown DirectedWeightedGraph::weighted_degree(NodeId id) const {
    require_node(id);
    WeightedDegreeBreakdown w;
    for (const auto& [source, weight] : in_.find(id)->second) {
        w.in_weight += weight;
    }
    for (const auto& [target, weight] : out_.find(id)->second) {
        w.out_weight += weight;
    }
    w.total = w.in_weight + w.out_weight;
    return w;
}

double DirectedWeightedGraph::density() const {
    const std::size_t n = nodes_.size();
    if (n < 2) {
        throw TooFewNodesError("density requires at least 2 nodes, graph has " +
                               std::to_string(n));
    }
    // For undirected views both orientations are stored, so the directed
    // ratio coincides with pairs / (n*(n-1)/2).
    return static_cast<double>(edge_count_) / static_cast<double>(n * (n - 1));
}

double DirectedWeightedGraph::total_edge_weight() const {
    double sum = 0.0;
    for (const auto& [source, adjacency] : out_) {
        for (const auto& [target, weight] : adjacency) {
            sum += weight;
        }
    }
    return undirected_ ? sum / 2.0 : sum;
}

DirectedWeightedGraph DirectedWeightedGraph::symmetrize() const {
    if (undirected_) {
        return *this;
    }
    DirectedWeightedGraph result;
    for (NodeId id : nodes_) {
        result.add_node(id);
    }
    for (const auto& [source, adjacency] : out_) {
        for (const auto& [target, weight] : adjacency) {
            if (result.has_edge(source, target)) {
                continue; // pair already folded from the opposite direction
            }
            double pair_weight = weight;
            auto reverse = out_.find(target);
            if (reverse != out_.end()) {
                auto back = reverse->second.find(source);
                if (back != reverse->second.end()) {
                    pair_weight += back->second;
                }
            }
            result.add_edge(source, target, pair_weight);
            result.add_edge(target, source, pair_weight);
        }
    }
    result.undirected_ = true;
    return result;
}

void DirectedWeightedGraph::require_node(NodeId id) const {
    if (!has_node(id)) {
        throw UnknownNodeError(node_label(id) + " is not in the graph");
    }
}

} // namespace orgknow
