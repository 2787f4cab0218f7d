#include "orgknow/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "orgknow/csv.hpp"

namespace orgknow {

namespace {

std::string location(const std::string& source, std::size_t line) {
    return source + ":" + std::to_string(line);
}

std::ifstream open_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path.string());
    }
    return in;
}

const std::vector<std::string_view> kRosterHeader = {"id", "name"};
const std::vector<std::string_view> kBallotHeader = {"respondent_id", "rank", "target_id"};
const std::vector<std::string_view> kFollowerHeader = {"node_id", "followers", "posts",
                                                       "following"};
const std::vector<std::string_view> kEndorsementHeader = {"node_id", "endorsements",
                                                          "connections", "skills"};

} // namespace

Roster parse_roster(std::istream& in, const std::string& source) {
    auto rows = read_csv(in, source);
    if (rows.empty()) {
        throw EmptyRosterError(source + ": file is empty");
    }
    require_header(rows.front(), kRosterHeader, source);
    Roster roster;
    std::map<NodeId, std::size_t> first_seen;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const CsvRow& row = rows[i];
        require_fields(row, 2, source);
        NodeId id = parse_id_field(row, 0, source, "id");
        if (row.fields[1].empty()) {
            throw MalformedRowError(location(source, row.line_number) + ": empty name");
        }
        auto [it, inserted] = first_seen.emplace(id, row.line_number);
        if (!inserted) {
            throw DuplicateIdError(source + ": duplicate id " + std::to_string(id) + " (lines " +
                                   std::to_string(it->second) + " and " +
                                   std::to_string(row.line_number) + ")");
        }
        roster.add(id, row.fields[1]);
    }
    if (roster.empty()) {
        throw EmptyRosterError(source + ": roster has no entries");
    }
    return roster;
}

Roster parse_roster_file(const std::filesystem::path& path) {
    auto in = open_file(path);
    return parse_roster(in, path.string());
}

std::vector<Ballot> parse_ballots(std::istream& in, const Roster& roster,
                                  const WeightScheme& scheme, const std::string& source) {
    auto rows = read_csv(in, source);
    if (rows.empty()) {
        throw MalformedRowError(source + ": missing header row");
    }
    require_header(rows.front(), kBallotHeader, source);

    struct Vote {
        NodeId target;
        std::size_t line;
    };
    std::map<NodeId, std::map<std::size_t, Vote>> by_respondent;
    std::map<NodeId, std::set<NodeId>> targets_seen;

    for (std::size_t i = 1; i < rows.size(); ++i) {
        const CsvRow& row = rows[i];
        require_fields(row, 3, source);
        NodeId respondent = parse_id_field(row, 0, source, "respondent_id");
        std::int64_t rank = parse_integer_field(row, 1, source, "rank");
        NodeId target = parse_id_field(row, 2, source, "target_id");
        const std::string where = location(source, row.line_number);

        if (rank < 1) {
            throw MalformedRowError(where + ": rank must be >= 1, got " + std::to_string(rank));
        }
        if (static_cast<std::size_t>(rank) > scheme.max_rank()) {
            throw OverlongBallotError(where + ": rank " + std::to_string(rank) +
                                      " exceeds the scheme maximum " +
                                      std::to_string(scheme.max_rank()));
        }
        if (!roster.contains(respondent)) {
            throw UnknownNodeError(where + ": respondent " + std::to_string(respondent) +
                                   " is not in the roster");
        }
        if (!roster.contains(target)) {
            throw UnknownNodeError(where + ": target " + std::to_string(target) +
                                   " is not in the roster");
        }
        if (target == respondent) {
            throw SelfVoteError(where + ": respondent " + std::to_string(respondent) +
                                " voted for themselves");
        }
        if (!targets_seen[respondent].insert(target).second) {
            throw DuplicateTargetError(where + ": respondent " + std::to_string(respondent) +
                                       " ranked node " + std::to_string(target) +
                                       " more than once");
        }
        auto [it, inserted] =
            by_respondent[respondent].emplace(static_cast<std::size_t>(rank),
                                              Vote{target, row.line_number});
        if (!inserted) {
            throw RankGapError(source + ": respondent " + std::to_string(respondent) +
                               " has rank " + std::to_string(rank) + " twice (lines " +
                               std::to_string(it->second.line) + " and " +
                               std::to_string(row.line_number) + ")");
        }
    }

    std::vector<Ballot> ballots;
    ballots.reserve(by_respondent.size());
    for (const auto& [respondent, votes] : by_respondent) {
        Ballot ballot;
        ballot.respondent = respondent;
        std::size_t expected = 1;
        for (const auto& [rank, vote] : votes) {
            if (rank != expected) {
                throw RankGapError(source + ": respondent " + std::to_string(respondent) +
                                   " is missing rank " + std::to_string(expected) +
                                   " (next present rank is " + std::to_string(rank) + ")");
            }
            ballot.ranking.push_back(vote.target);
            ++expected;
        }
        validate_ballot(ballot, roster, scheme);
        ballots.push_back(std::move(ballot));
    }
    return ballots;
}

std::vector<Ballot> parse_ballots_file(const std::filesystem::path& path, const Roster& roster,
                                       const WeightScheme& scheme) {
    auto in = open_file(path);
    return parse_ballots(in, roster, scheme, path.string());
}

namespace {

void assign_counts(FollowerMetrics& m, const std::uint64_t counts[3]) {
    m.followers = counts[0];
    m.posts = counts[1];
    m.following = counts[2];
}

void assign_counts(EndorsementMetrics& m, const std::uint64_t counts[3]) {
    m.endorsements = counts[0];
    m.connections = counts[1];
    m.skills = counts[2];
}

template <typename Metrics>
std::vector<Metrics> parse_metrics(std::istream& in, const Roster& roster,
                                   const std::string& platform, const std::string& source,
                                   const std::vector<std::string_view>& header,
                                   const char* const columns[3]) {
    auto rows = read_csv(in, source);
    if (rows.empty()) {
        throw MalformedRowError(source + ": missing header row");
    }
    require_header(rows.front(), header, source);
    std::map<NodeId, std::size_t> first_seen;
    std::map<NodeId, Metrics> parsed;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const CsvRow& row = rows[i];
        require_fields(row, 4, source);
        Metrics m;
        m.node = parse_id_field(row, 0, source, "node_id");
        m.platform = platform;
        std::uint64_t counts[3];
        for (std::size_t c = 0; c < 3; ++c) {
            counts[c] = parse_count_field(row, c + 1, source, columns[c]);
        }
        assign_counts(m, counts);
        if (!roster.contains(m.node)) {
            throw UnknownNodeError(location(source, row.line_number) + ": node " +
                                   std::to_string(m.node) + " is not in the roster");
        }
        auto [it, inserted] = first_seen.emplace(m.node, row.line_number);
        if (!inserted) {
            throw DuplicateIdError(source + ": duplicate node " + std::to_string(m.node) +
                                   " (lines " + std::to_string(it->second) + " and " +
                                   std::to_string(row.line_number) + ")");
        }
        parsed.emplace(m.node, std::move(m));
    }
    std::vector<Metrics> result;
    result.reserve(parsed.size());
    for (auto& [id, m] : parsed) {
        result.push_back(std::move(m));
    }
    return result;
}

} // namespace

std::vector<FollowerMetrics> parse_follower_metrics(std::istream& in, const Roster& roster,
                                                    const std::string& platform,
                                                    const std::string& source) {
    static const char* const columns[3] = {"followers", "posts", "following"};
    return parse_metrics<FollowerMetrics>(in, roster, platform, source, kFollowerHeader, columns);
}

std::vector<FollowerMetrics> parse_follower_metrics_file(const std::filesystem::path& path,
                                                         const Roster& roster,
                                                         const std::string& platform) {
    auto in = open_file(path);
    return parse_follower_metrics(in, roster, platform, path.string());
}

std::vector<EndorsementMetrics> parse_endorsement_metrics(std::istream& in, const Roster& roster,
                                                          const std::string& platform,
                                                          const std::string& source) {
    static const char* const columns[3] = {"endorsements", "connections", "skills"};
    return parse_metrics<EndorsementMetrics>(in, roster, platform, source, kEndorsementHeader,
                                             columns);
}

std::vector<EndorsementMetrics> parse_endorsement_metrics_file(const std::filesystem::path& path,
                                                               const Roster& roster,
                                                               const std::string& platform) {
    auto in = open_file(path);
    return parse_endorsement_metrics(in, roster, platform, path.string());
}

MetricsKind sniff_metrics_kind(const std::filesystem::path& path) {
    auto in = open_file(path);
    std::string line;
    if (!std::getline(in, line)) {
        throw MalformedRowError(path.string() + ": missing header row");
    }
    std::istringstream header_stream(line);
    auto rows = read_csv(header_stream, path.string());
    const auto& fields = rows.front().fields;
    auto matches = [&fields](const std::vector<std::string_view>& header) {
        return std::equal(fields.begin(), fields.end(), header.begin(), header.end());
    };
    if (matches(kFollowerHeader)) {
        return MetricsKind::follower;
    }
    if (matches(kEndorsementHeader)) {
        return MetricsKind::endorsement;
    }
    throw MalformedRowError(path.string() +
                            ": header matches neither follower metrics "
                            "(node_id,followers,posts,following) nor endorsement metrics "
                            "(node_id,endorsements,connections,skills)");
}

std::string centrality_csv(const std::vector<CentralityRecord>& table, const Roster& roster) {
    std::string out = "node,name,degree,weighted_degree\n";
    for (const CentralityRecord& record : table) {
        out += std::to_string(record.node);
        out += ',';
        out += csv_escape(roster.name_of(record.node));
        out += ',';
        out += std::to_string(record.degree);
        out += ',';
        out += format_fixed(record.weighted_degree, 3);
        out += '\n';
    }
    return out;
}

std::string reputation_csv(const std::vector<TotalReputation>& totals,
                           const std::map<std::string, std::vector<RawScore>>& raw_scores,
                           const Roster& roster) {
    std::map<std::string, std::map<NodeId, double>> raw_by_platform;
    for (const auto& [platform, scores] : raw_scores) {
        for (const RawScore& score : scores) {
            raw_by_platform[platform][score.node] = score.value;
        }
    }
    std::set<std::string> platforms;
    for (const auto& [platform, scores] : raw_scores) {
        platforms.insert(platform);
    }
    for (const TotalReputation& total : totals) {
        for (const auto& [platform, value] : total.components) {
            platforms.insert(platform);
        }
    }

    std::string out = "node,name";
    for (const std::string& platform : platforms) {
        out += ',' + platform + "_raw," + platform + "_normalized";
    }
    out += ",total_reputation\n";

    for (const TotalReputation& total : totals) {
        out += std::to_string(total.node);
        out += ',';
        out += csv_escape(roster.name_of(total.node));
        for (const std::string& platform : platforms) {
            auto component = total.components.find(platform);
            if (component == total.components.end()) {
                out += ",absent,absent";
                continue;
            }
            out += ',';
            out += format_fixed(raw_by_platform.at(platform).at(total.node), 3);
            out += ',';
            out += format_fixed(component->second, 3);
        }
        out += ',';
        out += format_fixed(total.value, 3);
        out += '\n';
    }
    return out;
}

std::string report_csv(const AnalysisReport& report) {
    std::set<std::string> platforms;
    for (const CombinedNodeRecord& record : report.records) {
        for (const auto& [platform, score] : record.platform_scores) {
            platforms.insert(platform);
        }
    }
    std::string out = "node,name,degree,weighted_degree";
    for (const std::string& platform : platforms) {
        out += ',' + platform;
    }
    out += ",total_reputation,size,centrality_rank,reputation_rank,rank_delta\n";
    for (const CombinedNodeRecord& record : report.records) {
        out += std::to_string(record.node);
        out += ',';
        out += csv_escape(record.name);
        out += ',';
        out += std::to_string(record.degree);
        out += ',';
        out += format_fixed(record.weighted_degree, 3);
        for (const std::string& platform : platforms) {
            auto it = record.platform_scores.find(platform);
            if (it != record.platform_scores.end() && it->second.has_value()) {
                out += ',';
                out += format_fixed(*it->second, 3);
            } else {
                out += ",absent";
            }
        }
        out += ',';
        out += format_fixed(record.total_reputation, 3);
        out += ',';
        out += format_fixed(record.size_attribute, 3);
        out += ',';
        out += std::to_string(record.centrality_rank);
        out += ',';
        out += std::to_string(record.reputation_rank);
        out += ',';
        out += std::to_string(record.rank_delta);
        out += '\n';
    }
    return out;
}

std::string report_json_text(const AnalysisReport& report) {
    nlohmann::json doc;
    doc["generated_with"] = {
        {"scheme", report.generated_with.scheme_weights},
        {"policy", report.generated_with.policy},
        {"normalization", report.generated_with.normalization},
    };
    doc["node_count"] = report.node_count;
    doc["edge_count"] = report.edge_count;
    if (report.density.has_value()) {
        doc["density"] = *report.density;
    } else {
        doc["density"] = nullptr;
    }
    nlohmann::json records = nlohmann::json::array();
    for (const CombinedNodeRecord& record : report.records) {
        nlohmann::json scores;
        for (const auto& [platform, score] : record.platform_scores) {
            if (score.has_value()) {
                scores[platform] = *score;
            } else {
                scores[platform] = nullptr;
            }
        }
        records.push_back({
            {"node", record.node},
            {"name", record.name},
            {"degree", record.degree},
            {"weighted_degree", record.weighted_degree},
            {"platform_scores", std::move(scores)},
            {"total_reputation", record.total_reputation},
            {"size", record.size_attribute},
            {"centrality_rank", record.centrality_rank},
            {"reputation_rank", record.reputation_rank},
            {"rank_delta", record.rank_delta},
        });
    }
    doc["records"] = std::move(records);
    return doc.dump(2) + "\n";
}

} // namespace orgknow
