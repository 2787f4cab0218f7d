#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "orgknow/ballots.hpp"
#include "orgknow/export.hpp"
#include "orgknow/io.hpp"
#include "orgknow/report.hpp"
#include "orgknow/reputation.hpp"

namespace orgknow {

/// Everything one batch run needs. Flags override config-file keys, which
/// override these defaults.
struct PipelineConfig {
    std::filesystem::path roster_path;
    std::filesystem::path ballots_path;
    std::map<std::string, std::filesystem::path> follower_metrics_paths;
    std::map<std::string, std::filesystem::path> endorsement_metrics_paths;
    std::vector<double> scheme_weights = {10, 9, 8, 7, 6, 5, 4, 3, 2, 1};
    ZeroDenominatorPolicy policy = ZeroDenominatorPolicy::clamp;
    std::filesystem::path output_dir = "out";
    std::vector<GraphFormat> export_formats = {GraphFormat::graphml, GraphFormat::json};
    std::size_t top = 5;
};

/// Loads a JSON config file. Recognized keys: roster, ballots,
/// follower_metrics, endorsement_metrics, scheme, policy, out, formats,
/// top. Relative paths are resolved against the config file's directory;
/// unknown keys are rejected.
PipelineConfig load_config_file(const std::filesystem::path& path);

/// Checks the fields every full run needs: roster and ballots paths set,
/// at least one export format, and no platform claimed by both metric
/// maps.
void validate_config(const PipelineConfig& config);

/// Roster, knowledge network, and centrality ranking (the survey half of
/// the pipeline).
struct KnowledgeStage {
    Roster roster;
    DirectedWeightedGraph graph;
    std::vector<CentralityRecord> centrality;
};

KnowledgeStage build_knowledge_stage(const PipelineConfig& config);

/// Per-platform scores and fused totals (the social-media half).
struct ReputationStage {
    std::map<std::string, std::vector<RawScore>> raw_scores;
    std::map<std::string, std::vector<NormalizedScore>> normalized_scores;
    std::vector<TotalReputation> totals;
};

ReputationStage build_reputation_stage(const PipelineConfig& config, const Roster& roster);

struct PipelineResult {
    KnowledgeStage knowledge;
    ReputationStage reputation;
    AnalysisReport report;
};

/// Parse -> build graph -> centrality -> score -> normalize -> fuse ->
/// combined report. Pure function of the input files and config.
PipelineResult execute_pipeline(const PipelineConfig& config);

/// Node attributes exported with the combined network: weighted_degree,
/// total_reputation, and size (= total_reputation).
NodeAttributes combined_node_attributes(const AnalysisReport& report);

/// Writes centrality.csv, reputation.csv, report.csv, report.json, and
/// network.<format> for every requested format into the output directory,
/// creating it if needed. Returns the written paths. Output bytes depend
/// only on the result, so repeated runs are byte-identical.
std::vector<std::filesystem::path> write_pipeline_outputs(const PipelineResult& result,
                                                          const PipelineConfig& config);

/// execute_pipeline + write_pipeline_outputs.
std::vector<std::filesystem::path> run_pipeline(const PipelineConfig& config);

} // namespace orgknow
