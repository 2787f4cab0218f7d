#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "orgknow/graph.hpp"

namespace orgknow {

/// Employee roster: id -> display name, ordered by id.
class Roster {
public:
    void add(NodeId id, std::string name);

    bool contains(NodeId id) const { return entries_.contains(id); }
    const std::string& name_of(NodeId id) const;
    const std::map<NodeId, std::string>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

private:
    std::map<NodeId, std::string> entries_;
};

/// One respondent's ordered top-K ranking of colleagues, best first.
struct Ballot {
    NodeId respondent = 0;
    std::vector<NodeId> ranking;
};

/// Rank -> edge-weight mapping. Weights are strictly decreasing and
/// positive, so a better rank always yields a strictly heavier edge.
class WeightScheme {
public:
    explicit WeightScheme(std::vector<double> weights);

    /// Linear descending scheme: ranks 1..10 weigh 10 down to 1.
    static WeightScheme default_scheme();

    /// Maximum ballot length K.
    std::size_t max_rank() const { return weights_.size(); }

    /// Weight attached to a 1-based rank.
    double weight_for_rank(std::size_t rank) const;

    const std::vector<double>& weights() const { return weights_; }

private:
    std::vector<double> weights_;
};

struct CentralityRecord {
    NodeId node;
    std::size_t degree = 0;
    double weighted_degree = 0.0;
};

/// Checks every ballot invariant against the roster and scheme and returns
/// the ballot unchanged. Throws SelfVoteError, DuplicateTargetError,
/// UnknownNodeError, OverlongBallotError, or EmptyBallotError.
const Ballot& validate_ballot(const Ballot& ballot, const Roster& roster,
                              const WeightScheme& scheme);

/// Builds the knowledge network: every roster member becomes a node (voted
/// or not), and each ballot entry at rank r becomes an edge
/// respondent -> target weighted by the scheme. At most one ballot per
/// respondent; all ballots are validated first.
DirectedWeightedGraph build_knowledge_graph(const std::vector<Ballot>& ballots,
                                            const Roster& roster,
                                            const WeightScheme& scheme);

/// One record per node, sorted by weighted degree descending, ties by
/// degree descending, then node id ascending.
std::vector<CentralityRecord> centrality_table(const DirectedWeightedGraph& graph);

} // namespace orgknow
