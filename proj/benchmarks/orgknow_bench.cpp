#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "orgknow/ballots.hpp"
#include "orgknow/export.hpp"
#include "orgknow/pipeline.hpp"
#include "orgknow/report.hpp"
#include "orgknow/reputation.hpp"

using namespace orgknow;

namespace {

Roster make_roster(std::size_t n) {
    Roster roster;
    for (NodeId id = 1; id <= n; ++id) {
        roster.add(id, "EMPLOYEE " + std::to_string(id));
    }
    return roster;
}

std::vector<Ballot> make_ballots(std::size_t n, std::mt19937& rng) {
    std::uniform_int_distribution<NodeId> pick(1, static_cast<NodeId>(n));
    std::vector<Ballot> ballots;
    ballots.reserve(n);
    for (NodeId respondent = 1; respondent <= n; ++respondent) {
        Ballot ballot;
        ballot.respondent = respondent;
        while (ballot.ranking.size() < 10) {
            NodeId candidate = pick(rng);
            if (candidate == respondent ||
                std::find(ballot.ranking.begin(), ballot.ranking.end(), candidate) !=
                    ballot.ranking.end()) {
                continue;
            }
            ballot.ranking.push_back(candidate);
        }
        ballots.push_back(std::move(ballot));
    }
    return ballots;
}

void BM_BuildKnowledgeGraph(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    auto roster = make_roster(n);
    std::mt19937 rng(42);
    auto ballots = make_ballots(n, rng);
    auto scheme = WeightScheme::default_scheme();
    for (auto _ : state) {
        auto graph = build_knowledge_graph(ballots, roster, scheme);
        benchmark::DoNotOptimize(graph.edge_count());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(10 * n));
}

void BM_CentralityTable(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    auto roster = make_roster(n);
    std::mt19937 rng(42);
    auto graph = build_knowledge_graph(make_ballots(n, rng), roster,
                                       WeightScheme::default_scheme());
    for (auto _ : state) {
        auto table = centrality_table(graph);
        benchmark::DoNotOptimize(table.data());
    }
}

void BM_FollowerScores(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::uint64_t> count(0, 100'000);
    std::vector<FollowerMetrics> metrics;
    for (NodeId id = 1; id <= n; ++id) {
        metrics.push_back({id, "twitter", count(rng), count(rng) % 5000, count(rng) % 3000});
    }
    for (auto _ : state) {
        double sum = 0.0;
        for (const auto& m : metrics) {
            sum += follower_reputation(m, ZeroDenominatorPolicy::clamp).value;
        }
        benchmark::DoNotOptimize(sum);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void BM_NormalizePlatform(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> value(0.0, 500.0);
    std::vector<RawScore> raw;
    for (NodeId id = 1; id <= n; ++id) {
        raw.push_back({id, "twitter", value(rng)});
    }
    for (auto _ : state) {
        auto normalized = normalize_platform(raw);
        benchmark::DoNotOptimize(normalized.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void BM_ExportGraphml(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    auto roster = make_roster(n);
    std::mt19937 rng(42);
    auto graph = build_knowledge_graph(make_ballots(n, rng), roster,
                                       WeightScheme::default_scheme());
    NodeAttributes attributes;
    for (NodeId id = 1; id <= n; ++id) {
        double wd = graph.weighted_degree(id).total;
        attributes[id] = {{"weighted_degree", wd}, {"total_reputation", wd / 55.0},
                          {"size", wd / 55.0}};
    }
    for (auto _ : state) {
        auto exported = export_graph(graph, attributes, GraphFormat::graphml);
        benchmark::DoNotOptimize(exported.bytes.data());
    }
    state.SetBytesProcessed(
        static_cast<std::int64_t>(state.iterations()) *
        static_cast<std::int64_t>(export_graph(graph, attributes, GraphFormat::graphml)
                                      .bytes.size()));
}

BENCHMARK(BM_BuildKnowledgeGraph)->Arg(48)->Arg(1000);
BENCHMARK(BM_CentralityTable)->Arg(48)->Arg(1000);
BENCHMARK(BM_FollowerScores)->Arg(10000);
BENCHMARK(BM_NormalizePlatform)->Arg(10000);
BENCHMARK(BM_ExportGraphml)->Arg(1000);

} // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    benchmark::RunSpecifiedBenchmarks();
    return 0;
}
