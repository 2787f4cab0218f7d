#include "orgknow/reputation.hpp"

#include <algorithm>

namespace orgknow {

namespace {

double safe_ratio(std::uint64_t numerator, std::uint64_t denominator,
                  ZeroDenominatorPolicy policy, const RawScore& score,
                  const char* denominator_name) {
    if (denominator == 0) {
        if (policy == ZeroDenominatorPolicy::strict) {
            throw ZeroDenominatorError("node " + std::to_string(score.node) + " on " +
                                       score.platform + ": " + denominator_name + " is 0");
        }
        denominator = 1;
    }
    return static_cast<double>(numerator) / static_cast<double>(denominator);
}

} // namespace

ZeroDenominatorPolicy parse_policy_name(const std::string& name) {
    if (name == "strict") {
        return ZeroDenominatorPolicy::strict;
    }
    if (name == "clamp") {
        return ZeroDenominatorPolicy::clamp;
    }
    throw ConfigError("unknown zero-denominator policy '" + name + "' (expected strict or clamp)");
}

std::string policy_name(ZeroDenominatorPolicy policy) {
    return policy == ZeroDenominatorPolicy::strict ? "strict" : "clamp";
}

RawScore follower_reputation(const FollowerMetrics& metrics, ZeroDenominatorPolicy policy) {
    RawScore score{metrics.node, metrics.platform, 0.0};
    score.value = safe_ratio(metrics.followers, metrics.posts, policy, score, "posts") +
                  safe_ratio(metrics.followers, metrics.following, policy, score, "following");
    return score;
}

RawScore endorsement_reputation(const EndorsementMetrics& metrics, ZeroDenominatorPolicy policy) {
    RawScore score{metrics.node, metrics.platform, 0.0};
    score.value = safe_ratio(metrics.endorsements, metrics.connections, policy, score, "connections") +
                  safe_ratio(metrics.endorsements, metrics.skills, policy, score, "skills");
    return score;
}

std::vector<NormalizedScore> normalize_platform(const std::vector<RawScore>& scores) {
    if (scores.empty()) {
        throw EmptyInputError("cannot normalize an empty score list");
    }
    const std::string& platform = scores.front().platform;
    double max_value = 0.0;
    for (const RawScore& score : scores) {
        if (score.platform != platform) {
            throw MixedPlatformError("normalize_platform received scores for '" + platform +
                                     "' and '" + score.platform + "'");
        }
        max_value = std::max(max_value, score.value);
    }
    std::vector<NormalizedScore> normalized;
    normalized.reserve(scores.size());
    for (const RawScore& score : scores) {
        double value = max_value > 0.0 ? score.value / max_value : 0.0;
        normalized.push_back({score.node, score.platform, value});
    }
    return normalized;
}

std::vector<TotalReputation> total_reputation(
    const std::map<std::string, std::vector<NormalizedScore>>& per_platform,
    const Roster& roster) {
    std::map<NodeId, TotalReputation> by_node;
    for (const auto& [id, name] : roster.entries()) {
        by_node[id].node = id;
    }
    for (const auto& [platform, scores] : per_platform) {
        for (const NormalizedScore& score : scores) {
            auto it = by_node.find(score.node);
            if (it == by_node.end()) {
                throw UnknownNodeError("normalized score for node " + std::to_string(score.node) +
                                       " on " + platform + " has no roster entry");
            }
            it->second.components[platform] = score.value;
            it->second.value += score.value;
        }
    }
    std::vector<TotalReputation> totals;
    totals.reserve(by_node.size());
    for (auto& [id, total] : by_node) {
        totals.push_back(std::move(total));
    }
    std::sort(totals.begin(), totals.end(), [](const TotalReputation& a, const TotalReputation& b) {
        if (a.value != b.value) {
            return a.value > b.value;
        }
        return a.node < b.node;
    });
    return totals;
}

std::vector<ResidualRecord> validate_additive_model(
    const std::vector<TotalReputation>& totals,
    const std::map<NodeId, std::map<std::string, double>>& known_components,
    const std::vector<std::string>& platforms) {
    constexpr double epsilon = 1e-9;
    std::vector<ResidualRecord> records;
    records.reserve(totals.size());
    for (const TotalReputation& total : totals) {
        ResidualRecord record;
        record.node = total.node;
        double known_sum = 0.0;
        std::size_t known_count = 0;
        auto it = known_components.find(total.node);
        if (it != known_components.end()) {
            for (const auto& [platform, value] : it->second) {
                known_sum += value;
                ++known_count;
            }
        }
        std::size_t unknown = platforms.size() >= known_count ? platforms.size() - known_count : 0;
        record.residual = total.value - known_sum;
        record.upper_bound = static_cast<double>(unknown);
        record.within_bounds =
            record.residual >= -epsilon && record.residual <= record.upper_bound + epsilon;
        records.push_back(record);
    }
    return records;
}

} // namespace orgknow
