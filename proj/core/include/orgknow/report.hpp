#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orgknow/ballots.hpp"
#include "orgknow/graph.hpp"
#include "orgknow/reputation.hpp"

namespace orgknow {

/// Fused per-node view: knowledge-network metrics plus social-media
/// reputation. platform_scores holds nullopt for platforms the node has no
/// account on, which is distinct from a genuine 0.0 score. size_attribute
/// drives node sizing in exports and always equals total_reputation.
/// rank_delta = centrality rank - reputation rank, so a positive value
/// means the node ranks better by reputation than by internal knowledge.
struct CombinedNodeRecord {
    NodeId node = 0;
    std::string name;
    std::size_t degree = 0;
    double weighted_degree = 0.0;
    std::map<std::string, std::optional<double>> platform_scores;
    double total_reputation = 0.0;
    double size_attribute = 0.0;
    std::size_t centrality_rank = 0;
    std::size_t reputation_rank = 0;
    long long rank_delta = 0;
};

/// Configuration echo embedded in every report.
struct ReportConfigSummary {
    std::vector<double> scheme_weights;
    std::string policy = "clamp";
    std::string normalization = "max";
};

struct AnalysisReport {
    std::vector<CombinedNodeRecord> records;
    std::optional<double> density; // nullopt when the graph has < 2 nodes
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    ReportConfigSummary generated_with;
};

/// Sort key for report slices. The named keys use the deterministic
/// tie-break chains of the report; platform_score ranks by one platform's
/// normalized score with absent nodes last.
struct RankKey {
    enum class Kind { total_reputation, weighted_degree, degree, platform_score };

    Kind kind = Kind::total_reputation;
    std::string platform; // only for platform_score

    static RankKey total_reputation() { return {Kind::total_reputation, {}}; }
    static RankKey weighted_degree() { return {Kind::weighted_degree, {}}; }
    static RankKey degree() { return {Kind::degree, {}}; }
    static RankKey platform_score(std::string platform) {
        return {Kind::platform_score, std::move(platform)};
    }

    /// Parses "total_reputation", "weighted_degree", "degree", or
    /// "platform:<name>".
    static RankKey parse(const std::string& text);

    std::string name() const;
};

/// Builds the combined report: one record per roster node, sorted by total
/// reputation descending, ties by weighted degree descending, then node id
/// ascending. The graph and the totals must cover exactly the roster's
/// node set.
AnalysisReport combined_report(const DirectedWeightedGraph& graph,
                               const std::vector<TotalReputation>& totals,
                               const Roster& roster,
                               ReportConfigSummary generated_with = {});

/// First k records under the chosen key (all records when k exceeds the
/// roster size).
std::vector<CombinedNodeRecord> top_k(const AnalysisReport& report, std::size_t k,
                                      const RankKey& key);

} // namespace orgknow
