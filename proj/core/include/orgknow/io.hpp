#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include "orgknow/ballots.hpp"
#include "orgknow/report.hpp"
#include "orgknow/reputation.hpp"

namespace orgknow {

// All parsers take a `source` label (usually the file path) that prefixes
// every error message together with the offending line number.

/// Roster CSV: header `id,name`, one employee per row.
Roster parse_roster(std::istream& in, const std::string& source = "roster");
Roster parse_roster_file(const std::filesystem::path& path);

/// Ballot CSV: header `respondent_id,rank,target_id`, one vote per row.
/// Rows may appear in any order; they are grouped per respondent and the
/// ranks of each respondent must form 1..L without gaps or repeats.
std::vector<Ballot> parse_ballots(std::istream& in, const Roster& roster,
                                  const WeightScheme& scheme,
                                  const std::string& source = "ballots");
std::vector<Ballot> parse_ballots_file(const std::filesystem::path& path, const Roster& roster,
                                       const WeightScheme& scheme);

/// Follower-platform CSV: header `node_id,followers,posts,following`.
/// Employees without an account on the platform are simply absent.
std::vector<FollowerMetrics> parse_follower_metrics(std::istream& in, const Roster& roster,
                                                    const std::string& platform,
                                                    const std::string& source = "metrics");
std::vector<FollowerMetrics> parse_follower_metrics_file(const std::filesystem::path& path,
                                                         const Roster& roster,
                                                         const std::string& platform);

/// Endorsement-platform CSV: header `node_id,endorsements,connections,skills`.
std::vector<EndorsementMetrics> parse_endorsement_metrics(std::istream& in, const Roster& roster,
                                                          const std::string& platform,
                                                          const std::string& source = "metrics");
std::vector<EndorsementMetrics> parse_endorsement_metrics_file(const std::filesystem::path& path,
                                                               const Roster& roster,
                                                               const std::string& platform);

/// Which formula family a metrics file feeds, decided by its header row.
enum class MetricsKind { follower, endorsement };
MetricsKind sniff_metrics_kind(const std::filesystem::path& path);

// --- report serialization (deterministic; CSV values use 3 decimals,
// JSON keeps full precision) ---

std::string centrality_csv(const std::vector<CentralityRecord>& table, const Roster& roster);

std::string reputation_csv(const std::vector<TotalReputation>& totals,
                           const std::map<std::string, std::vector<RawScore>>& raw_scores,
                           const Roster& roster);

std::string report_csv(const AnalysisReport& report);

std::string report_json_text(const AnalysisReport& report);

} // namespace orgknow
