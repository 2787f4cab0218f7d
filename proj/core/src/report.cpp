#include "orgknow/report.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace orgknow {

namespace {

bool before_by_total(const CombinedNodeRecord& a, const CombinedNodeRecord& b) {
    if (a.total_reputation != b.total_reputation) {
        return a.total_reputation > b.total_reputation;
    }
    if (a.weighted_degree != b.weighted_degree) {
        return a.weighted_degree > b.weighted_degree;
    }
    return a.node < b.node;
}

bool before_by_weighted_degree(const CombinedNodeRecord& a, const CombinedNodeRecord& b) {
    if (a.weighted_degree != b.weighted_degree) {
        return a.weighted_degree > b.weighted_degree;
    }
    if (a.degree != b.degree) {
        return a.degree > b.degree;
    }
    return a.node < b.node;
}

bool before_by_degree(const CombinedNodeRecord& a, const CombinedNodeRecord& b) {
    if (a.degree != b.degree) {
        return a.degree > b.degree;
    }
    if (a.weighted_degree != b.weighted_degree) {
        return a.weighted_degree > b.weighted_degree;
    }
    return a.node < b.node;
}

} // namespace

RankKey RankKey::parse(const std::string& text) {
    if (text == "total_reputation") {
        return total_reputation();
    }
    if (text == "weighted_degree") {
        return weighted_degree();
    }
    if (text == "degree") {
        return degree();
    }
    constexpr std::string_view prefix = "platform:";
    if (text.starts_with(prefix) && text.size() > prefix.size()) {
        return platform_score(text.substr(prefix.size()));
    }
    throw ConfigError("unknown rank key '" + text +
                      "' (expected total_reputation, weighted_degree, degree, or platform:<name>)");
}

std::string RankKey::name() const {
    switch (kind) {
    case Kind::total_reputation: return "total_reputation";
    case Kind::weighted_degree: return "weighted_degree";
    case Kind::degree: return "degree";
    case Kind::platform_score: return "platform:" + platform;
    }
    return {};
}

AnalysisReport combined_report(const DirectedWeightedGraph& graph,
                               const std::vector<TotalReputation>& totals,
                               const Roster& roster,
                               ReportConfigSummary generated_with) {
    std::set<NodeId> roster_ids;
    for (const auto& [id, name] : roster.entries()) {
        roster_ids.insert(id);
    }
    if (graph.nodes() != roster_ids) {
        throw RosterMismatchError("graph node set does not match the roster");
    }
    std::set<NodeId> total_ids;
    for (const TotalReputation& total : totals) {
        total_ids.insert(total.node);
    }
    if (total_ids != roster_ids) {
        throw RosterMismatchError("reputation totals do not cover the roster exactly");
    }

    // Platform universe: every platform any node has a component for.
    std::set<std::string> platforms;
    for (const TotalReputation& total : totals) {
        for (const auto& [platform, value] : total.components) {
            platforms.insert(platform);
        }
    }

    std::map<NodeId, std::size_t> centrality_rank;
    {
        auto table = centrality_table(graph);
        for (std::size_t i = 0; i < table.size(); ++i) {
            centrality_rank[table[i].node] = i + 1;
        }
    }

    AnalysisReport report;
    report.generated_with = std::move(generated_with);
    report.node_count = graph.node_count();
    report.edge_count = graph.edge_count();
    if (graph.node_count() >= 2) {
        report.density = graph.density();
    }

    report.records.reserve(totals.size());
    for (const TotalReputation& total : totals) {
        CombinedNodeRecord record;
        record.node = total.node;
        record.name = roster.name_of(total.node);
        record.degree = graph.degree(total.node).total;
        record.weighted_degree = graph.weighted_degree(total.node).total;
        for (const std::string& platform : platforms) {
            auto it = total.components.find(platform);
            record.platform_scores[platform] =
                it != total.components.end() ? std::optional<double>(it->second) : std::nullopt;
        }
        record.total_reputation = total.value;
        record.size_attribute = total.value;
        record.centrality_rank = centrality_rank.at(total.node);
        report.records.push_back(std::move(record));
    }

    std::sort(report.records.begin(), report.records.end(), before_by_total);
    for (std::size_t i = 0; i < report.records.size(); ++i) {
        auto& record = report.records[i];
        record.reputation_rank = i + 1;
        record.rank_delta = static_cast<long long>(record.centrality_rank) -
                            static_cast<long long>(record.reputation_rank);
    }
    return report;
}

std::vector<CombinedNodeRecord> top_k(const AnalysisReport& report, std::size_t k,
                                      const RankKey& key) {
    std::vector<CombinedNodeRecord> records = report.records;
    switch (key.kind) {
    case RankKey::Kind::total_reputation:
        std::sort(records.begin(), records.end(), before_by_total);
        break;
    case RankKey::Kind::weighted_degree:
        std::sort(records.begin(), records.end(), before_by_weighted_degree);
        break;
    case RankKey::Kind::degree:
        std::sort(records.begin(), records.end(), before_by_degree);
        break;
    case RankKey::Kind::platform_score: {
        auto score_of = [&key](const CombinedNodeRecord& r) -> std::optional<double> {
            auto it = r.platform_scores.find(key.platform);
            return it != r.platform_scores.end() ? it->second : std::nullopt;
        };
        std::sort(records.begin(), records.end(),
                  [&score_of](const CombinedNodeRecord& a, const CombinedNodeRecord& b) {
                      auto sa = score_of(a);
                      auto sb = score_of(b);
                      if (sa.has_value() != sb.has_value()) {
                          return sa.has_value(); // absent nodes sort last
                      }
                      if (sa.has_value() && *sa != *sb) {
                          return *sa > *sb;
                      }
                      return a.node < b.node;
                  });
        break;
    }
    }
    if (records.size() > k) {
        records.resize(k);
    }
    return records;
}

} // namespace orgknow
