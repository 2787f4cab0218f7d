#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "orgknow/csv.hpp"
#include "orgknow/pipeline.hpp"

namespace {

using namespace orgknow;

struct CliOptions {
    std::string config_path;
    std::string roster;
    std::string ballots;
    std::vector<std::string> metrics; // platform=path, header decides the formula
    std::vector<double> scheme;
    std::string policy;
    std::vector<std::string> formats;
    std::string out;
    std::size_t top = 0;

    CLI::Option* roster_opt = nullptr;
    CLI::Option* ballots_opt = nullptr;
    CLI::Option* metrics_opt = nullptr;
    CLI::Option* scheme_opt = nullptr;
    CLI::Option* policy_opt = nullptr;
    CLI::Option* formats_opt = nullptr;
    CLI::Option* out_opt = nullptr;
    CLI::Option* top_opt = nullptr;
};

void add_common_options(CLI::App* cmd, CliOptions& opts) {
    cmd->add_option("--config", opts.config_path, "JSON config file")
        ->envname("ORGKNOW_CONFIG");
    opts.roster_opt = cmd->add_option("--roster", opts.roster, "Roster CSV (id,name)");
    opts.ballots_opt =
        cmd->add_option("--ballots", opts.ballots, "Ballot CSV (respondent_id,rank,target_id)");
    opts.metrics_opt = cmd->add_option("--metrics", opts.metrics,
                                       "Platform metrics as <platform>=<path>; the CSV header "
                                       "selects the follower or endorsement formula");
    opts.scheme_opt = cmd->add_option("--scheme", opts.scheme,
                                      "Rank weights, best rank first (default 10,9,...,1)")
                          ->delimiter(',');
    opts.policy_opt =
        cmd->add_option("--policy", opts.policy, "Zero-denominator policy: strict or clamp");
    opts.formats_opt = cmd->add_option("--format", opts.formats,
                                       "Graph export formats: graphml,dot,json,csv")
                           ->delimiter(',');
    opts.out_opt = cmd->add_option("--out", opts.out, "Output directory (default out)");
    opts.top_opt = cmd->add_option("--top", opts.top, "Rows in printed rankings (default 5)");
}

PipelineConfig resolve_config(const CliOptions& opts) {
    PipelineConfig config;
    if (!opts.config_path.empty()) {
        config = load_config_file(opts.config_path);
    }
    if (opts.roster_opt->count() > 0) {
        config.roster_path = opts.roster;
    }
    if (opts.ballots_opt->count() > 0) {
        config.ballots_path = opts.ballots;
    }
    if (opts.metrics_opt->count() > 0) {
        config.follower_metrics_paths.clear();
        config.endorsement_metrics_paths.clear();
        for (const std::string& spec : opts.metrics) {
            auto eq = spec.find('=');
            if (eq == std::string::npos || eq == 0 || eq + 1 >= spec.size()) {
                throw ConfigError("--metrics expects <platform>=<path>, got '" + spec + "'");
            }
            std::string platform = spec.substr(0, eq);
            std::filesystem::path path = spec.substr(eq + 1);
            if (config.follower_metrics_paths.contains(platform) ||
                config.endorsement_metrics_paths.contains(platform)) {
                throw ConfigError("platform '" + platform + "' given more than once");
            }
            switch (sniff_metrics_kind(path)) {
            case MetricsKind::follower:
                config.follower_metrics_paths[platform] = path;
                break;
            case MetricsKind::endorsement:
                config.endorsement_metrics_paths[platform] = path;
                break;
            }
        }
    }
    if (opts.scheme_opt->count() > 0) {
        config.scheme_weights = opts.scheme;
    }
    if (opts.policy_opt->count() > 0) {
        config.policy = parse_policy_name(opts.policy);
    }
    if (opts.formats_opt->count() > 0) {
        config.export_formats.clear();
        for (const std::string& name : opts.formats) {
            config.export_formats.push_back(parse_format_name(name));
        }
    }
    if (opts.out_opt->count() > 0) {
        config.output_dir = opts.out;
    }
    if (opts.top_opt->count() > 0) {
        config.top = opts.top;
    }
    return config;
}

std::filesystem::path write_output(const PipelineConfig& config, const std::string& filename,
                                   const std::string& bytes) {
    std::error_code ec;
    std::filesystem::create_directories(config.output_dir, ec);
    if (ec) {
        throw InputError("cannot create output directory " + config.output_dir.string() + ": " +
                         ec.message());
    }
    auto path = config.output_dir / filename;
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot write " + path.string());
    }
    out << bytes;
    if (!out) {
        throw InputError("failed writing " + path.string());
    }
    return path;
}

void print_written(const std::vector<std::filesystem::path>& files) {
    for (const auto& path : files) {
        std::cout << "wrote " << path.string() << '\n';
    }
}

void print_centrality(const KnowledgeStage& stage, std::size_t top) {
    std::cout << "top " << top << " by weighted degree:\n";
    std::cout << "  rank  node  degree  weighted_degree  name\n";
    std::size_t rank = 0;
    for (const CentralityRecord& record : stage.centrality) {
        if (++rank > top) {
            break;
        }
        std::cout << "  " << std::left << std::setw(6) << rank << std::setw(6) << record.node
                  << std::setw(8) << record.degree << std::setw(17)
                  << format_fixed(record.weighted_degree, 3) << stage.roster.name_of(record.node)
                  << '\n';
    }
}

void print_totals(const std::vector<TotalReputation>& totals, const Roster& roster,
                  std::size_t top) {
    std::cout << "top " << top << " by total reputation:\n";
    std::cout << "  rank  node  total  name\n";
    std::size_t rank = 0;
    for (const TotalReputation& total : totals) {
        if (++rank > top) {
            break;
        }
        std::cout << "  " << std::left << std::setw(6) << rank << std::setw(6) << total.node
                  << std::setw(7) << format_fixed(total.value, 3) << roster.name_of(total.node)
                  << '\n';
    }
}

int cmd_run(const CliOptions& opts) {
    PipelineConfig config = resolve_config(opts);
    PipelineResult result = execute_pipeline(config);
    auto files = write_pipeline_outputs(result, config);
    print_written(files);
    std::cout << result.report.node_count << " nodes, " << result.report.edge_count << " edges";
    if (result.report.density.has_value()) {
        std::cout << ", density " << format_fixed(*result.report.density, 3);
    }
    std::cout << '\n';
    print_totals(result.reputation.totals, result.knowledge.roster, config.top);
    return 0;
}

int cmd_build(const CliOptions& opts) {
    PipelineConfig config = resolve_config(opts);
    KnowledgeStage stage = build_knowledge_stage(config);

    // Fig-3-style view: node size follows the knowledge (weighted degree)
    // ranking, reputation plays no part yet.
    NodeAttributes attributes;
    for (const CentralityRecord& record : stage.centrality) {
        attributes[record.node] = {
            {"degree", static_cast<double>(record.degree)},
            {"weighted_degree", record.weighted_degree},
            {"size", record.weighted_degree},
        };
    }
    std::vector<std::filesystem::path> files;
    for (GraphFormat format : config.export_formats) {
        auto exported = export_graph(stage.graph, attributes, format);
        files.push_back(
            write_output(config, "knowledge_network." + format_name(format), exported.bytes));
    }
    print_written(files);
    std::cout << stage.graph.node_count() << " nodes, " << stage.graph.edge_count() << " edges";
    if (stage.graph.node_count() >= 2) {
        std::cout << ", density " << format_fixed(stage.graph.density(), 3);
    }
    std::cout << '\n';
    return 0;
}

int cmd_centrality(const CliOptions& opts) {
    PipelineConfig config = resolve_config(opts);
    KnowledgeStage stage = build_knowledge_stage(config);
    auto path = write_output(config, "centrality.csv", centrality_csv(stage.centrality, stage.roster));
    print_written({path});
    print_centrality(stage, config.top);
    return 0;
}

int cmd_reputation(const CliOptions& opts) {
    PipelineConfig config = resolve_config(opts);
    if (config.roster_path.empty()) {
        throw ConfigError("config is missing the roster path");
    }
    Roster roster = parse_roster_file(config.roster_path);
    ReputationStage stage = build_reputation_stage(config, roster);
    auto path = write_output(config, "reputation.csv",
                             reputation_csv(stage.totals, stage.raw_scores, roster));
    print_written({path});
    print_totals(stage.totals, roster, config.top);
    return 0;
}

int cmd_combine(const CliOptions& opts) {
    PipelineConfig config = resolve_config(opts);
    PipelineResult result = execute_pipeline(config);
    std::vector<std::filesystem::path> files;
    files.push_back(write_output(config, "report.csv", report_csv(result.report)));
    files.push_back(write_output(config, "report.json", report_json_text(result.report)));
    print_written(files);
    print_totals(result.reputation.totals, result.knowledge.roster, config.top);
    return 0;
}

int cmd_export(const CliOptions& opts) {
    PipelineConfig config = resolve_config(opts);
    PipelineResult result = execute_pipeline(config);
    NodeAttributes attributes = combined_node_attributes(result.report);
    std::vector<std::filesystem::path> files;
    for (GraphFormat format : config.export_formats) {
        auto exported = export_graph(result.knowledge.graph, attributes, format);
        files.push_back(write_output(config, "network." + format_name(format), exported.bytes));
    }
    print_written(files);
    return 0;
}

int cmd_check(const CliOptions& opts) {
    PipelineConfig config = resolve_config(opts);
    if (config.roster_path.empty()) {
        throw ConfigError("config is missing the roster path");
    }
    Roster roster = parse_roster_file(config.roster_path);
    std::cout << "roster: OK (" << roster.size() << " employees)\n";

    if (!config.ballots_path.empty()) {
        WeightScheme scheme(config.scheme_weights);
        auto ballots = parse_ballots_file(config.ballots_path, roster, scheme);
        auto graph = build_knowledge_graph(ballots, roster, scheme);
        std::cout << "ballots: OK (" << ballots.size() << " ballots, " << graph.edge_count()
                  << " votes)\n";
        std::cout << "graph: OK (" << graph.node_count() << " nodes, " << graph.edge_count()
                  << " edges";
        if (graph.node_count() >= 2) {
            std::cout << ", density " << format_fixed(graph.density(), 3);
        }
        std::cout << ")\n";
    } else {
        std::cout << "ballots: skipped (no path configured)\n";
    }

    for (const auto& [platform, path] : config.follower_metrics_paths) {
        auto metrics = parse_follower_metrics_file(path, roster, platform);
        for (const FollowerMetrics& m : metrics) {
            follower_reputation(m, config.policy);
        }
        std::cout << "metrics " << platform << " (follower): OK (" << metrics.size()
                  << " accounts)\n";
    }
    for (const auto& [platform, path] : config.endorsement_metrics_paths) {
        auto metrics = parse_endorsement_metrics_file(path, roster, platform);
        for (const EndorsementMetrics& m : metrics) {
            endorsement_reputation(m, config.policy);
        }
        std::cout << "metrics " << platform << " (endorsement): OK (" << metrics.size()
                  << " accounts)\n";
    }
    std::cout << "check passed\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Knowledge-network and social-media reputation analytics"};
    app.set_version_flag("--version", "orgknow 0.1.0");
    app.require_subcommand(1);

    struct Command {
        const char* name;
        const char* description;
        int (*handler)(const CliOptions&);
    };
    static const Command commands[] = {
        {"run", "Full pipeline: parse, rank, score, fuse, and export", cmd_run},
        {"build", "Build the knowledge network and export it", cmd_build},
        {"centrality", "Degree-centrality ranking of the knowledge network", cmd_centrality},
        {"reputation", "Per-platform and total reputation scores", cmd_reputation},
        {"combine", "Combined knowledge + reputation report", cmd_combine},
        {"export", "Export the combined network in graph formats", cmd_export},
        {"check", "Validate all configured input files and exit", cmd_check},
    };

    std::vector<std::pair<CLI::App*, const Command*>> apps;
    std::vector<CliOptions> options(std::size(commands));
    for (std::size_t i = 0; i < std::size(commands); ++i) {
        CLI::App* sub = app.add_subcommand(commands[i].name, commands[i].description);
        if (std::string(commands[i].name) == "run") {
            sub->alias("run-pipeline");
        }
        add_common_options(sub, options[i]);
        apps.emplace_back(sub, &commands[i]);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        for (std::size_t i = 0; i < apps.size(); ++i) {
            if (apps[i].first->parsed()) {
                return apps[i].second->handler(options[i]);
            }
        }
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "orgknow: " << e.what() << '\n';
        return 2;
    } catch (const InputError& e) {
        std::cerr << "orgknow: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "orgknow: " << e.what() << '\n';
        return 1;
    }
}
