#include "orgknow/pipeline.hpp"

#include <fstream>
#include <set>

#include "json.hpp"

namespace orgknow {

namespace {

std::filesystem::path resolve_relative(const std::filesystem::path& base,
                                       const std::filesystem::path& path) {
    return path.is_absolute() ? path : base / path;
}

std::map<std::string, std::filesystem::path> read_path_map(const nlohmann::json& value,
                                                           const std::filesystem::path& base,
                                                           const std::string& key) {
    if (!value.is_object()) {
        throw ConfigError("config key '" + key + "' must map platform names to file paths");
    }
    std::map<std::string, std::filesystem::path> paths;
    for (auto it = value.begin(); it != value.end(); ++it) {
        if (!it.value().is_string()) {
            throw ConfigError("config key '" + key + "." + it.key() + "' must be a file path");
        }
        paths[it.key()] = resolve_relative(base, it.value().get<std::string>());
    }
    return paths;
}

} // namespace

PipelineConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config " + path.string());
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError(path.string() + ": config must be a JSON object");
    }

    const std::filesystem::path base = path.parent_path();
    PipelineConfig config;
    static const std::set<std::string> known_keys = {
        "roster", "ballots", "follower_metrics", "endorsement_metrics",
        "scheme", "policy",  "out",              "formats",
        "top",
    };
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (!known_keys.contains(it.key())) {
            throw ConfigError(path.string() + ": unknown config key '" + it.key() + "'");
        }
    }
    try {
        if (doc.contains("roster")) {
            config.roster_path = resolve_relative(base, doc["roster"].get<std::string>());
        }
        if (doc.contains("ballots")) {
            config.ballots_path = resolve_relative(base, doc["ballots"].get<std::string>());
        }
        if (doc.contains("follower_metrics")) {
            config.follower_metrics_paths =
                read_path_map(doc["follower_metrics"], base, "follower_metrics");
        }
        if (doc.contains("endorsement_metrics")) {
            config.endorsement_metrics_paths =
                read_path_map(doc["endorsement_metrics"], base, "endorsement_metrics");
        }
        if (doc.contains("scheme")) {
            config.scheme_weights = doc["scheme"].get<std::vector<double>>();
        }
        if (doc.contains("policy")) {
            config.policy = parse_policy_name(doc["policy"].get<std::string>());
        }
        if (doc.contains("out")) {
            config.output_dir = resolve_relative(base, doc["out"].get<std::string>());
        }
        if (doc.contains("formats")) {
            config.export_formats.clear();
            for (const auto& name : doc["formats"]) {
                config.export_formats.push_back(parse_format_name(name.get<std::string>()));
            }
        }
        if (doc.contains("top")) {
            config.top = doc["top"].get<std::size_t>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
    return config;
}

void validate_config(const PipelineConfig& config) {
    if (config.roster_path.empty()) {
        throw ConfigError("config is missing the roster path");
    }
    if (config.ballots_path.empty()) {
        throw ConfigError("config is missing the ballots path");
    }
    if (config.export_formats.empty()) {
        throw ConfigError("config requests no export formats; at least one is required");
    }
    for (const auto& [platform, metrics_path] : config.follower_metrics_paths) {
        if (config.endorsement_metrics_paths.contains(platform)) {
            throw ConfigError("platform '" + platform +
                              "' appears in both follower and endorsement metrics");
        }
    }
}

KnowledgeStage build_knowledge_stage(const PipelineConfig& config) {
    if (config.roster_path.empty()) {
        throw ConfigError("config is missing the roster path");
    }
    if (config.ballots_path.empty()) {
        throw ConfigError("config is missing the ballots path");
    }
    KnowledgeStage stage;
    WeightScheme scheme(config.scheme_weights);
    stage.roster = parse_roster_file(config.roster_path);
    auto ballots = parse_ballots_file(config.ballots_path, stage.roster, scheme);
    stage.graph = build_knowledge_graph(ballots, stage.roster, scheme);
    stage.centrality = centrality_table(stage.graph);
    return stage;
}

ReputationStage build_reputation_stage(const PipelineConfig& config, const Roster& roster) {
    ReputationStage stage;
    for (const auto& [platform, path] : config.follower_metrics_paths) {
        auto metrics = parse_follower_metrics_file(path, roster, platform);
        std::vector<RawScore> raw;
        raw.reserve(metrics.size());
        for (const FollowerMetrics& m : metrics) {
            raw.push_back(follower_reputation(m, config.policy));
        }
        if (!raw.empty()) {
            stage.normalized_scores[platform] = normalize_platform(raw);
        }
        stage.raw_scores[platform] = std::move(raw);
    }
    for (const auto& [platform, path] : config.endorsement_metrics_paths) {
        auto metrics = parse_endorsement_metrics_file(path, roster, platform);
        std::vector<RawScore> raw;
        raw.reserve(metrics.size());
        for (const EndorsementMetrics& m : metrics) {
            raw.push_back(endorsement_reputation(m, config.policy));
        }
        if (!raw.empty()) {
            stage.normalized_scores[platform] = normalize_platform(raw);
        }
        stage.raw_scores[platform] = std::move(raw);
    }
    stage.totals = total_reputation(stage.normalized_scores, roster);
    return stage;
}

PipelineResult execute_pipeline(const PipelineConfig& config) {
    validate_config(config);
    PipelineResult result;
    result.knowledge = build_knowledge_stage(config);
    result.reputation = build_reputation_stage(config, result.knowledge.roster);
    ReportConfigSummary summary;
    summary.scheme_weights = config.scheme_weights;
    summary.policy = policy_name(config.policy);
    summary.normalization = "max";
    result.report = combined_report(result.knowledge.graph, result.reputation.totals,
                                    result.knowledge.roster, std::move(summary));
    return result;
}

NodeAttributes combined_node_attributes(const AnalysisReport& report) {
    NodeAttributes attributes;
    for (const CombinedNodeRecord& record : report.records) {
        attributes[record.node] = {
            {"weighted_degree", record.weighted_degree},
            {"total_reputation", record.total_reputation},
            {"size", record.size_attribute},
        };
    }
    return attributes;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot write " + path.string());
    }
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw InputError("failed writing " + path.string());
    }
}

} // namespace

std::vector<std::filesystem::path> write_pipeline_outputs(const PipelineResult& result,
                                                          const PipelineConfig& config) {
    std::error_code ec;
    std::filesystem::create_directories(config.output_dir, ec);
    if (ec) {
        throw InputError("cannot create output directory " + config.output_dir.string() + ": " +
                         ec.message());
    }
    std::vector<std::filesystem::path> written;
    auto emit = [&written](const std::filesystem::path& path, const std::string& bytes) {
        write_file(path, bytes);
        written.push_back(path);
    };

    emit(config.output_dir / "centrality.csv",
         centrality_csv(result.knowledge.centrality, result.knowledge.roster));
    emit(config.output_dir / "reputation.csv",
         reputation_csv(result.reputation.totals, result.reputation.raw_scores,
                        result.knowledge.roster));
    emit(config.output_dir / "report.csv", report_csv(result.report));
    emit(config.output_dir / "report.json", report_json_text(result.report));

    NodeAttributes attributes = combined_node_attributes(result.report);
    for (GraphFormat format : config.export_formats) {
        ExportedGraph exported = export_graph(result.knowledge.graph, attributes, format);
        emit(config.output_dir / ("network." + format_name(format)), exported.bytes);
    }
    return written;
}

std::vector<std::filesystem::path> run_pipeline(const PipelineConfig& config) {
    PipelineResult result = execute_pipeline(config);
    return write_pipeline_outputs(result, config);
}

} // namespace orgknow
