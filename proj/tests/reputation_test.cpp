#include "orgknow/reputation.hpp"

#include <cmath>
#include <random>

#include "doctest.h"

using namespace orgknow;

namespace {

constexpr auto kClamp = ZeroDenominatorPolicy::clamp;
constexpr auto kStrict = ZeroDenominatorPolicy::strict;

FollowerMetrics follower(NodeId node, std::uint64_t followers, std::uint64_t posts,
                         std::uint64_t following) {
    return {node, "twitter", followers, posts, following};
}

EndorsementMetrics endorsement(NodeId node, std::uint64_t endorsements,
                               std::uint64_t connections, std::uint64_t skills) {
    return {node, "linkedin", endorsements, connections, skills};
}

} // namespace

TEST_CASE("follower reputation is followers/posts + followers/following") {
    CHECK(follower_reputation(follower(1, 100, 50, 25), kStrict).value == 6.0);
    CHECK(follower_reputation(follower(1, 0, 10, 10), kStrict).value == 0.0);
    CHECK(follower_reputation(follower(1, 50, 0, 25), kClamp).value == 52.0);
    CHECK_THROWS_AS(follower_reputation(follower(1, 50, 0, 25), kStrict), ZeroDenominatorError);
    CHECK_THROWS_AS(follower_reputation(follower(1, 50, 25, 0), kStrict), ZeroDenominatorError);
}

TEST_CASE("endorsement reputation is endorsements/connections + endorsements/skills") {
    CHECK(endorsement_reputation(endorsement(1, 30, 150, 10), kStrict).value ==
          doctest::Approx(3.2).epsilon(1e-12));
    CHECK(endorsement_reputation(endorsement(1, 0, 7, 3), kStrict).value == 0.0);
    CHECK(endorsement_reputation(endorsement(1, 4, 0, 2), kClamp).value == 6.0);
    CHECK_THROWS_AS(endorsement_reputation(endorsement(1, 4, 0, 2), kStrict),
                    ZeroDenominatorError);
}

TEST_CASE("scores carry node and platform through") {
    auto score = follower_reputation({7, "instagram", 10, 5, 2}, kStrict);
    CHECK(score.node == 7);
    CHECK(score.platform == "instagram");
    CHECK(score.value == 7.0);
}

TEST_CASE("raw scores are scale invariant") {
    std::mt19937 rng(7011);
    std::uniform_int_distribution<std::uint64_t> numerator(0, 1'000'000);
    std::uniform_int_distribution<std::uint64_t> denominator(1, 100'000);
    for (int round = 0; round < 200; ++round) {
        std::uint64_t a = numerator(rng), b = denominator(rng), c = denominator(rng);
        double base = follower_reputation(follower(1, a, b, c), kStrict).value;
        double base_e = endorsement_reputation(endorsement(1, a, b, c), kStrict).value;
        for (std::uint64_t scale : {2, 3, 10}) {
            double scaled =
                follower_reputation(follower(1, a * scale, b * scale, c * scale), kStrict).value;
            CHECK(std::abs(scaled - base) <= 1e-9);
            double scaled_e =
                endorsement_reputation(endorsement(1, a * scale, b * scale, c * scale), kStrict)
                    .value;
            CHECK(std::abs(scaled_e - base_e) <= 1e-9);
        }
    }
}

TEST_CASE("raw scores are monotone in the expected directions") {
    // More followers with fixed activity: strictly better.
    double lo = follower_reputation(follower(1, 100, 20, 30), kStrict).value;
    double hi = follower_reputation(follower(1, 101, 20, 30), kStrict).value;
    CHECK(hi > lo);
    // More posts or more following with fixed followers: strictly worse.
    CHECK(follower_reputation(follower(1, 100, 21, 30), kStrict).value < lo);
    CHECK(follower_reputation(follower(1, 100, 20, 31), kStrict).value < lo);

    double elo = endorsement_reputation(endorsement(1, 30, 150, 10), kStrict).value;
    CHECK(endorsement_reputation(endorsement(1, 31, 150, 10), kStrict).value > elo);
    CHECK(endorsement_reputation(endorsement(1, 30, 151, 10), kStrict).value < elo);
    CHECK(endorsement_reputation(endorsement(1, 30, 150, 11), kStrict).value < elo);
}

TEST_CASE("normalize_platform scales by the maximum") {
    std::vector<RawScore> raw = {{1, "twitter", 6.0}, {2, "twitter", 3.0}, {3, "twitter", 0.0}};
    auto normalized = normalize_platform(raw);
    REQUIRE(normalized.size() == 3);
    CHECK(normalized[0].value == 1.0);
    CHECK(normalized[1].value == 0.5);
    CHECK(normalized[2].value == 0.0);
    CHECK(normalized[0].node == 1);
    CHECK(normalized[2].platform == "twitter");
}

TEST_CASE("normalize_platform handles the all-zero platform") {
    std::vector<RawScore> raw = {{1, "twitter", 0.0}, {2, "twitter", 0.0}};
    auto normalized = normalize_platform(raw);
    CHECK(normalized[0].value == 0.0);
    CHECK(normalized[1].value == 0.0);
}

TEST_CASE("normalize_platform rejects empty and mixed input") {
    CHECK_THROWS_AS(normalize_platform({}), EmptyInputError);
    std::vector<RawScore> mixed = {{1, "twitter", 1.0}, {2, "instagram", 2.0}};
    CHECK_THROWS_AS(normalize_platform(mixed), MixedPlatformError);
}

TEST_CASE("the platform maximum lands at exactly 1.0") {
    // Whatever raw values produced it, the top node's normalized score is
    // exactly 1.000 (published tables show the same).
    std::vector<RawScore> raw = {
        {2, "twitter", 13.37}, {10, "twitter", 6.043}, {24, "twitter", 4.707}};
    auto normalized = normalize_platform(raw);
    CHECK(normalized[0].value == 1.0);
    CHECK(normalized[1].value < 1.0);
    CHECK(normalized[2].value < 1.0);
}

TEST_CASE("normalization preserves ranking order") {
    std::mt19937 rng(90210);
    std::uniform_real_distribution<double> value(0.0, 1000.0);
    for (int round = 0; round < 50; ++round) {
        std::vector<RawScore> raw;
        std::size_t count = 1 + static_cast<std::size_t>(rng() % 40);
        for (std::size_t i = 0; i < count; ++i) {
            raw.push_back({static_cast<NodeId>(i + 1), "p", value(rng)});
        }
        auto normalized = normalize_platform(raw);
        REQUIRE(normalized.size() == raw.size());
        for (std::size_t i = 0; i < raw.size(); ++i) {
            CHECK(normalized[i].value >= 0.0);
            CHECK(normalized[i].value <= 1.0);
            for (std::size_t j = 0; j < raw.size(); ++j) {
                CHECK((raw[i].value < raw[j].value) ==
                      (normalized[i].value < normalized[j].value));
            }
        }
    }
}

TEST_CASE("total_reputation sums components across platforms") {
    Roster roster;
    for (NodeId id : {1, 2, 3}) {
        roster.add(id, "EMP " + std::to_string(id));
    }
    std::map<std::string, std::vector<NormalizedScore>> per_platform = {
        {"twitter", {{2, "twitter", 1.0}, {1, "twitter", 0.28}}},
        {"linkedin", {{2, "linkedin", 0.536}, {1, "linkedin", 1.0}}},
        {"instagram", {{2, "instagram", 0.031}}},
    };
    auto totals = total_reputation(per_platform, roster);
    REQUIRE(totals.size() == 3);

    CHECK(totals[0].node == 2);
    CHECK(totals[0].value == doctest::Approx(1.567).epsilon(1e-9));
    CHECK(totals[0].components.size() == 3);
    CHECK(totals[1].node == 1);
    CHECK(totals[1].value == doctest::Approx(1.28).epsilon(1e-9));
    // Node 3 is on no platform at all.
    CHECK(totals[2].node == 3);
    CHECK(totals[2].value == 0.0);
    CHECK(totals[2].components.empty());
}

TEST_CASE("single-platform totals are the identity") {
    Roster roster;
    roster.add(4, "EMP 4");
    std::map<std::string, std::vector<NormalizedScore>> per_platform = {
        {"twitter", {{4, "twitter", 0.7}}}};
    auto totals = total_reputation(per_platform, roster);
    REQUIRE(totals.size() == 1);
    CHECK(totals[0].value == 0.7);
}

TEST_CASE("total_reputation ties break by node id") {
    Roster roster;
    for (NodeId id : {3, 1, 2}) {
        roster.add(id, "EMP " + std::to_string(id));
    }
    auto totals = total_reputation({}, roster);
    REQUIRE(totals.size() == 3);
    CHECK(totals[0].node == 1);
    CHECK(totals[1].node == 2);
    CHECK(totals[2].node == 3);
}

TEST_CASE("total_reputation rejects scores for nodes outside the roster") {
    Roster roster;
    roster.add(1, "EMP 1");
    std::map<std::string, std::vector<NormalizedScore>> per_platform = {
        {"twitter", {{9, "twitter", 0.5}}}};
    CHECK_THROWS_AS(total_reputation(per_platform, roster), UnknownNodeError);
}

TEST_CASE("additive model residuals for the published tables") {
    // Totals as published; known components from the per-platform tables.
    std::vector<TotalReputation> totals = {
        {2, 1.567, {}}, {1, 1.358, {}}, {8, 1.172, {}}, {26, 0.790, {}}, {22, 0.619, {}}};
    std::map<NodeId, std::map<std::string, double>> known = {
        {2, {{"twitter", 1.000}, {"linkedin", 0.536}}},
        {1, {{"twitter", 0.280}, {"linkedin", 1.000}}},
        {8, {{"instagram", 1.000}}},
    };
    auto residuals =
        validate_additive_model(totals, known, {"twitter", "instagram", "linkedin"});
    REQUIRE(residuals.size() == 5);

    CHECK(residuals[0].node == 2);
    CHECK(residuals[0].residual == doctest::Approx(0.031).epsilon(1e-9));
    CHECK(residuals[0].upper_bound == 1.0);
    CHECK(residuals[0].within_bounds);

    CHECK(residuals[1].node == 1);
    CHECK(residuals[1].residual == doctest::Approx(0.078).epsilon(1e-9));
    CHECK(residuals[1].within_bounds);

    CHECK(residuals[2].node == 8);
    CHECK(residuals[2].residual == doctest::Approx(0.172).epsilon(1e-9));
    CHECK(residuals[2].upper_bound == 2.0);
    CHECK(residuals[2].within_bounds);
}

TEST_CASE("a total below its known components is flagged") {
    std::vector<TotalReputation> totals = {{5, 0.4, {}}};
    std::map<NodeId, std::map<std::string, double>> known = {{5, {{"twitter", 0.9}}}};
    auto residuals = validate_additive_model(totals, known, {"twitter", "linkedin"});
    REQUIRE(residuals.size() == 1);
    CHECK(residuals[0].residual == doctest::Approx(-0.5));
    CHECK_FALSE(residuals[0].within_bounds);
}

TEST_CASE("policy names parse and print") {
    CHECK(parse_policy_name("strict") == ZeroDenominatorPolicy::strict);
    CHECK(parse_policy_name("clamp") == ZeroDenominatorPolicy::clamp);
    CHECK_THROWS_AS(parse_policy_name("lenient"), ConfigError);
    CHECK(policy_name(ZeroDenominatorPolicy::clamp) == "clamp");
    CHECK(policy_name(ZeroDenominatorPolicy::strict) == "strict");
}
