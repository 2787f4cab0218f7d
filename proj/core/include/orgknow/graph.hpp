#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>

#include "orgknow/errors.hpp"

namespace orgknow {

/// Employee roster number. Valid ids start at 1.
using NodeId = std::uint32_t;

struct WeightedEdge {
    NodeId source;
    NodeId target;
    double weight;
};

struct DegreeBreakdown {
    std::size_t in_degree = 0;
    std::size_t out_degree = 0;
    std::size_t total = 0;
};

struct WeightedDegreeBreakdown {
    double in_weight = 0.0;
    double out_weight = 0.0;
    double total = 0.0;
};

/// Directed weighted simple graph over employee ids.
///
/// At most one edge per ordered (source, target) pair, no self-loops,
/// strictly positive weights. Construction is single-writer; once built,
/// all metric accessors are const and safe to call concurrently.
class DirectedWeightedGraph {
public:
    using AdjacencyMap = std::map<NodeId, double>;

    DirectedWeightedGraph() = default;

    /// Inserts a node. Re-adding an existing node is a no-op.
    void add_node(NodeId id);

    /// Inserts a directed edge. Both endpoints must already be nodes.
    void add_edge(NodeId source, NodeId target, double weight);
    void add_edge(const WeightedEdge& edge);

    bool has_node(NodeId id) const;
    bool has_edge(NodeId source, NodeId target) const;

    /// Weight of an existing edge.
    double edge_weight(NodeId source, NodeId target) const;

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    const std::set<NodeId>& nodes() const { return nodes_; }

    /// Outbound (resp. inbound) neighbors of a node with edge weights,
    /// ordered by neighbor id.
    const AdjacencyMap& out_edges(NodeId id) const;
    const AdjacencyMap& in_edges(NodeId id) const;

    DegreeBreakdown degree(NodeId id) const;
    WeightedDegreeBreakdown weighted_degree(NodeId id) const;

    /// Edge density. Directed graphs: m / (n * (n - 1)). Undirected views
    /// store both directions of each pair, so the same expression equals
    /// pairs / (n * (n - 1) / 2). Requires n >= 2.
    double density() const;

    /// Sum of edge weights; in an undirected view each pair counts once.
    double total_edge_weight() const;

    /// Collapses edge direction: for every pair of nodes joined in either
    /// direction, both orientations are stored with the summed weight and
    /// the result is flagged as an undirected view. Applying it to a graph
    /// that is already an undirected view returns the graph unchanged.
    DirectedWeightedGraph symmetrize() const;

    /// True for graphs produced by symmetrize().
    bool is_undirected() const { return undirected_; }

    friend bool operator==(const DirectedWeightedGraph& a, const DirectedWeightedGraph& b) {
        return a.undirected_ == b.undirected_ && a.nodes_ == b.nodes_ && a.out_ == b.out_;
    }

private:
    void require_node(NodeId id) const;

    std::set<NodeId> nodes_;
    std::map<NodeId, AdjacencyMap> out_;
    std::map<NodeId, AdjacencyMap> in_;
    std::size_t edge_count_ = 0;
    bool undirected_ = false;
};

} // namespace orgknow
