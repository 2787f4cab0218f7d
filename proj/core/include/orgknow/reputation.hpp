#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "orgknow/ballots.hpp"
#include "orgknow/graph.hpp"

namespace orgknow {

/// How to treat a zero activity count that appears in a denominator.
/// strict raises ZeroDenominatorError; clamp replaces the denominator d
/// with max(d, 1).
enum class ZeroDenominatorPolicy {
    strict,
    clamp,
};

ZeroDenominatorPolicy parse_policy_name(const std::string& name);
std::string policy_name(ZeroDenominatorPolicy policy);

/// Activity counts for follower-style platforms (e.g. twitter, instagram).
struct FollowerMetrics {
    NodeId node = 0;
    std::string platform;
    std::uint64_t followers = 0;
    std::uint64_t posts = 0;
    std::uint64_t following = 0;
};

/// Activity counts for endorsement-style platforms (e.g. linkedin).
struct EndorsementMetrics {
    NodeId node = 0;
    std::string platform;
    std::uint64_t endorsements = 0;
    std::uint64_t connections = 0;
    std::uint64_t skills = 0;
};

/// Per-platform reputation before scaling; always finite and >= 0.
struct RawScore {
    NodeId node = 0;
    std::string platform;
    double value = 0.0;
};

/// Per-platform reputation scaled into [0, 1].
struct NormalizedScore {
    NodeId node = 0;
    std::string platform;
    double value = 0.0;
};

/// Fused reputation: sum of a node's normalized platform scores. The
/// components map holds one entry per platform where the node has an
/// account; platforms the node is absent from contribute 0.
struct TotalReputation {
    NodeId node = 0;
    double value = 0.0;
    std::map<std::string, double> components;
};

/// followers/posts + followers/following.
RawScore follower_reputation(const FollowerMetrics& metrics, ZeroDenominatorPolicy policy);

/// endorsements/connections + endorsements/skills.
RawScore endorsement_reputation(const EndorsementMetrics& metrics, ZeroDenominatorPolicy policy);

/// Divides every score by the platform maximum so the top score is exactly
/// 1.0; an all-zero platform stays all zero. Input order is preserved and
/// the transform is monotone, so rankings survive unchanged. All scores
/// must belong to one platform.
std::vector<NormalizedScore> normalize_platform(const std::vector<RawScore>& scores);

/// Sums normalized scores across platforms for every roster node; nodes
/// missing from a platform contribute 0 there. Sorted by total descending,
/// ties by node id ascending.
std::vector<TotalReputation> total_reputation(
    const std::map<std::string, std::vector<NormalizedScore>>& per_platform,
    const Roster& roster);

/// Residual of one node's total against its known per-platform components.
/// The residual must fall inside [0, number of unknown platforms] for the
/// additive fusion model to be consistent with the published values.
struct ResidualRecord {
    NodeId node = 0;
    double residual = 0.0;
    double upper_bound = 0.0;
    bool within_bounds = false;
};

/// Cross-checks the additive fusion model: for each total, subtracts the
/// known component values and flags residuals outside their feasibility
/// bounds. `platforms` is the full platform universe the totals were
/// computed over.
std::vector<ResidualRecord> validate_additive_model(
    const std::vector<TotalReputation>& totals,
    const std::map<NodeId, std::map<std::string, double>>& known_components,
    const std::vector<std::string>& platforms);

} // namespace orgknow
