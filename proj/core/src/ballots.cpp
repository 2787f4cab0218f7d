#include "orgknow/ballots.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace orgknow {

void Roster::add(NodeId id, std::string name) {
    if (id == 0) {
        throw InvalidNodeIdError("roster ids must be >= 1");
    }
    auto [it, inserted] = entries_.emplace(id, std::move(name));
    if (!inserted) {
        throw DuplicateIdError("duplicate roster id " + std::to_string(id));
    }
}

const std::string& Roster::name_of(NodeId id) const {
    auto it = entries_.find(id);
    if (it == entries_.end()) {
        throw UnknownNodeError("node " + std::to_string(id) + " is not in the roster");
    }
    return it->second;
}

WeightScheme::WeightScheme(std::vector<double> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) {
        throw InvalidSchemeError("weight scheme must contain at least one weight");
    }
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (!(weights_[i] > 0.0)) {
            throw InvalidSchemeError("scheme weights must be > 0");
        }
        if (i > 0 && !(weights_[i - 1] > weights_[i])) {
            throw InvalidSchemeError("scheme weights must be strictly decreasing");
        }
    }
}

WeightScheme WeightScheme::default_scheme() {
    return WeightScheme({10, 9, 8, 7, 6, 5, 4, 3, 2, 1});
}

double WeightScheme::weight_for_rank(std::size_t rank) const {
    if (rank == 0 || rank > weights_.size()) {
        throw InvalidSchemeError("rank " + std::to_string(rank) + " is outside 1.." +
                                 std::to_string(weights_.size()));
    }
    return weights_[rank - 1];
}

const Ballot& validate_ballot(const Ballot& ballot, const Roster& roster,
                              const WeightScheme& scheme) {
    const std::string who = "respondent " + std::to_string(ballot.respondent);
    if (!roster.contains(ballot.respondent)) {
        throw UnknownNodeError(who + " is not in the roster");
    }
    if (ballot.ranking.empty()) {
        throw EmptyBallotError(who + ": ballot lists no colleagues");
    }
    if (ballot.ranking.size() > scheme.max_rank()) {
        throw OverlongBallotError(who + ": ballot lists " +
                                  std::to_string(ballot.ranking.size()) +
                                  " colleagues, scheme allows at most " +
                                  std::to_string(scheme.max_rank()));
    }
    std::set<NodeId> seen;
    for (NodeId target : ballot.ranking) {
        if (target == ballot.respondent) {
            throw SelfVoteError(who + " voted for themselves");
        }
        if (!roster.contains(target)) {
            throw UnknownNodeError(who + " ranked node " + std::to_string(target) +
                                   " which is not in the roster");
        }
        if (!seen.insert(target).second) {
            throw DuplicateTargetError(who + " ranked node " + std::to_string(target) +
                                       " more than once");
        }
    }
    return ballot;
}

DirectedWeightedGraph build_knowledge_graph(const std::vector<Ballot>& ballots,
                                            const Roster& roster,
                                            const WeightScheme& scheme) {
    DirectedWeightedGraph graph;
    for (const auto& [id, name] : roster.entries()) {
        graph.add_node(id);
    }
    std::set<NodeId> respondents;
    for (const Ballot& ballot : ballots) {
        validate_ballot(ballot, roster, scheme);
        if (!respondents.insert(ballot.respondent).second) {
            throw DuplicateRespondentError("respondent " + std::to_string(ballot.respondent) +
                                           " submitted more than one ballot");
        }
        for (std::size_t i = 0; i < ballot.ranking.size(); ++i) {
            graph.add_edge(ballot.respondent, ballot.ranking[i],
                           scheme.weight_for_rank(i + 1));
        }
    }
    return graph;
}

std::vector<CentralityRecord> centrality_table(const DirectedWeightedGraph& graph) {
    std::vector<CentralityRecord> table;
    table.reserve(graph.node_count());
    for (NodeId id : graph.nodes()) {
        table.push_back({id, graph.degree(id).total, graph.weighted_degree(id).total});
    }
    std::sort(table.begin(), table.end(), [](const CentralityRecord& a, const CentralityRecord& b) {
        if (a.weighted_degree != b.weighted_degree) {
            return a.weighted_degree > b.weighted_degree;
        }
        if (a.degree != b.degree) {
            return a.degree > b.degree;
        }
        return a.node < b.node;
    });
    return table;
}

} // namespace orgknow
