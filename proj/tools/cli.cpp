#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "snsgraph/collector.hpp"
#include "snsgraph/csv.hpp"
#include "snsgraph/error.hpp"
#include "snsgraph/gexf.hpp"
#include "snsgraph/ingest.hpp"
#include "snsgraph/seed.hpp"

#ifndef SNSGRAPH_VERSION
#define SNSGRAPH_VERSION "unknown"
#endif

namespace snsgraph::cli {

namespace fs = std::filesystem;
using nlohmann::json;

std::uint64_t resolve_global_seed(std::optional<std::uint64_t> flag) {
    if (flag) return *flag;
    return seed_from_environment().value_or(0);
}

namespace {

constexpr std::size_t kMaxShownDiagnostics = 10;

struct LoadedInput {
    std::size_t records_read = 0;
    std::size_t diagnostics = 0;
    bool from_corpus = false;
    std::vector<InteractionRecord> records;
    BuiltGraph built;
};

bool is_gexf(const std::string& path) {
    auto ext = fs::path(path).extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    return ext == ".gexf";
}

LoadedInput load_input(const std::string& path, const std::string& topic, std::ostream& log) {
    LoadedInput in;
    if (is_gexf(path)) {
        if (!topic.empty()) throw ConfigError("--topic needs a JSON-lines corpus, not a GEXF graph");
        in.built.graph = import_gexf_file(path);
        return in;
    }
    auto parsed = parse_corpus_file(path);
    in.from_corpus = true;
    in.records_read = parsed.records.size();
    in.diagnostics = parsed.diagnostics.size();
    for (std::size_t i = 0; i < parsed.diagnostics.size() && i < kMaxShownDiagnostics; ++i)
        log << fmt::format("warning: {}:{}: {}\n", path, parsed.diagnostics[i].line, parsed.diagnostics[i].reason);
    if (parsed.diagnostics.size() > kMaxShownDiagnostics)
        log << fmt::format("warning: {} more malformed lines skipped\n",
                           parsed.diagnostics.size() - kMaxShownDiagnostics);
    if (topic.empty()) {
        in.records = std::move(parsed.records);
    } else {
        in.records = filter_topic(parsed.records, TopicFilter::parse(topic));
        if (in.records.empty()) throw EmptyCorpusError("no record carries topic '" + topic + "'");
    }
    in.built = build_graph(in.records);
    return in;
}

void ensure_parent(const std::string& path) {
    if (auto parent = fs::path(path).parent_path(); !parent.empty()) fs::create_directories(parent);
}

template <typename Write>
void write_output(const std::string& path, std::ostream& out, Write&& write) {
    if (path.empty() || path == "-") {
        write(out);
        return;
    }
    ensure_parent(path);
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    write(file);
    file.close();
    if (!file) throw IoError("writing '" + path + "' failed");
}

std::vector<std::pair<Handle, double>> ranking(const CentralityVector& v, std::size_t top) {
    if (v.nodes.empty()) return {};
    return top_k(v, top == 0 ? v.nodes.size() : top);
}

std::vector<TermStats> ordered_terms(const std::vector<TermStats>& stats, TermOrder order, std::size_t top) {
    if (stats.empty()) return {};
    return top_terms(stats, top == 0 ? stats.size() : top, order);
}

std::set<std::string> maybe_stopwords(const std::string& path) {
    return path.empty() ? std::set<std::string>{} : load_stopwords_file(path);
}

std::optional<Lexicon> maybe_lexicon(const std::string& pos, const std::string& neg, std::ostream& log) {
    if (pos.empty() && neg.empty()) return std::nullopt;
    if (pos.empty() || neg.empty()) throw ConfigError("--lexicon-pos and --lexicon-neg go together");
    auto loaded = load_lexicon_files(pos, neg);
    for (const auto& w : loaded.warnings) log << "warning: " << w << '\n';
    return std::move(loaded.lexicon);
}

json config_echo(const PipelineConfig& c, const LouvainConfig& louvain, const LayoutConfig& layout) {
    return {
        {"input", c.input},
        {"topic", c.topic},
        {"louvain",
         {{"resolution", louvain.resolution}, {"min_gain", louvain.min_gain}, {"max_passes", louvain.max_passes}}},
        {"centrality",
         {{"mode", std::string(to_string(c.centrality.mode))},
          {"normalization", std::string(to_string(c.centrality.normalization))},
          {"tolerance", c.centrality.tolerance},
          {"max_iters", c.centrality.max_iters},
          {"teleport", c.centrality.teleport},
          {"top", c.top_accounts}}},
        {"text",
         {{"order", std::string(to_string(c.term_order))},
          {"top", c.top_terms},
          {"lexicon_positive", c.lexicon_positive},
          {"lexicon_negative", c.lexicon_negative},
          {"stopwords", c.stopwords}}},
        {"layout",
         {{"iterations", layout.iterations},
          {"scaling", layout.scaling},
          {"gravity", layout.gravity},
          {"edge_weight_influence", layout.edge_weight_influence},
          {"barnes_hut", std::string(to_string(layout.barnes_hut))},
          {"theta", layout.theta},
          {"jitter_tolerance", layout.jitter_tolerance}}},
        {"deviation",
         {{"enabled", c.deviation_enabled},
          {"metric", std::string(to_string(c.deviation.metric))},
          {"window", c.deviation.window},
          {"z_threshold", c.deviation.z_threshold},
          {"sigma_floor", c.deviation.sigma_floor},
          {"bucket_seconds", static_cast<double>(c.deviation.bucket_width.count()) / 1000.0}}},
        {"redaction",
         {{"allowlist", c.allowlist_path},
          {"allowlist_size", c.redaction.allowlist.size()},
          {"placeholder", c.redaction.placeholder}}},
    };
}

std::vector<AlertEvent> corpus_alerts(const std::vector<InteractionRecord>& records, const DeviationConfig& config,
                                      const Lexicon* lexicon) {
    if (records.empty()) return {};
    return detect_deviation(bucketize(records, config, lexicon), config);
}

} // namespace

AnalysisReport run_pipeline(const PipelineConfig& c, std::ostream& log) {
    if (c.out_dir.empty()) throw ConfigError("report needs an output directory");
    LouvainConfig louvain_cfg = c.louvain;
    louvain_cfg.seed = derive_seed(c.global_seed, kCommunitySeedName);
    LayoutConfig layout = c.layout;
    layout.seed = derive_seed(c.global_seed, kLayoutSeedName);
    louvain_cfg.validate();
    layout.validate();
    c.centrality.validate();
    if (c.deviation_enabled) c.deviation.validate();

    const auto lexicon = maybe_lexicon(c.lexicon_positive, c.lexicon_negative, log);
    if (c.deviation_enabled && c.deviation.metric == DeviationMetric::MeanSentiment && !lexicon)
        throw ConfigError("the mean_sentiment metric needs --lexicon-pos and --lexicon-neg");
    const auto stopwords = maybe_stopwords(c.stopwords);

    auto input = load_input(c.input, c.topic, log);
    if (!input.from_corpus) throw ConfigError("report needs a JSON-lines corpus");

    const auto partition = louvain(input.built.graph, louvain_cfg);
    const auto centrality = eigenvector_centrality(input.built.graph, c.centrality);
    if (!centrality.converged)
        log << fmt::format("warning: power iteration did not converge in {} iterations\n", centrality.iterations);
    const auto terms = term_stats(input.records, stopwords);
    const auto frame = run_layout(input.built.graph, layout);

    ReportInputs ri;
    ri.records_read = input.records_read;
    ri.parse_diagnostics = input.diagnostics;
    ri.records = &input.records;
    ri.built = &input.built;
    ri.partition = &partition;
    ri.centrality = &centrality;
    ri.terms = &terms;
    if (lexicon) ri.sentiment = corpus_sentiment(input.records, *lexicon);
    if (c.deviation_enabled) ri.alerts = corpus_alerts(input.records, c.deviation, lexicon ? &*lexicon : nullptr);
    ri.top_accounts = c.top_accounts;
    ri.top_terms = c.top_terms;
    ri.term_order = c.term_order;
    ri.metadata.tool_version = SNSGRAPH_VERSION;
    ri.metadata.global_seed = c.global_seed;
    ri.metadata.community_seed = louvain_cfg.seed;
    ri.metadata.layout_seed = layout.seed;
    ri.metadata.config_json = config_echo(c, louvain_cfg, layout).dump();
    const auto report = redact(assemble_report(ri), c.redaction);

    const fs::path dir(c.out_dir);
    fs::create_directories(dir);
    auto file = [&dir](const char* name) { return (dir / name).string(); };
    std::ostringstream unused;
    const char* report_name = c.format == ReportFormat::Json ? "report.json" : "report.txt";
    write_output(file(report_name), unused, [&](std::ostream& o) { o << render_report(report, c.format); });
    write_output(file("graph.gexf"), unused, [&](std::ostream& o) {
        export_gexf(input.built.graph, o, GexfAnnotations{&frame, &partition, &centrality.vector});
    });
    write_output(file("communities.csv"), unused, [&](std::ostream& o) { write_partition_csv(o, partition); });
    write_output(file("centrality.csv"), unused,
                 [&](std::ostream& o) { write_centrality_csv(o, ranking(centrality.vector, 0)); });
    write_output(file("terms.csv"), unused,
                 [&](std::ostream& o) { write_terms_csv(o, ordered_terms(terms, c.term_order, 0)); });
    write_output(file("layout.csv"), unused, [&](std::ostream& o) { write_layout_csv(o, frame); });
    write_output(file("alerts.jsonl"), unused, [&](std::ostream& o) {
        for (const auto& a : report.alerts) o << alert_to_json(a) << '\n';
    });
    return report;
}

namespace {

std::atomic<bool> g_stop{false};

extern "C" void on_signal(int) { g_stop = true; }

struct Options {
    std::string input;
    std::string output;
    std::string topic;
    std::optional<std::uint64_t> seed;
};

void add_input(CLI::App* sub, Options& o, bool corpus_only) {
    sub->add_option("--input,-i", o.input, corpus_only ? "JSON-lines corpus" : "JSON-lines corpus or .gexf graph")
        ->required();
    sub->add_option("--topic", o.topic, "Comma-separated topic hashtags to keep (corpus input only)");
}

void add_output(CLI::App* sub, Options& o, const char* what) {
    sub->add_option("--output,-o", o.output, std::string(what) + " destination (default stdout)");
}

const std::map<std::string, CentralityMode> kModes{{"incoming", CentralityMode::Incoming},
                                                   {"undirected", CentralityMode::Undirected}};
const std::map<std::string, Normalization> kNorms{{"l1", Normalization::L1}, {"max", Normalization::Max}};
const std::map<std::string, BarnesHutMode> kBarnesHut{
    {"auto", BarnesHutMode::Auto}, {"on", BarnesHutMode::On}, {"off", BarnesHutMode::Off}};
const std::map<std::string, TermOrder> kOrders{{"count", TermOrder::Count}, {"salience", TermOrder::Salience}};
const std::map<std::string, ReportFormat> kFormats{{"json", ReportFormat::Json}, {"text", ReportFormat::Text}};
const std::map<std::string, DeviationMetric> kMetrics{{"volume", DeviationMetric::Volume},
                                                      {"mean_sentiment", DeviationMetric::MeanSentiment}};

template <typename Enum>
CLI::Option* add_choice(CLI::App* sub, const std::string& name, Enum& target, const std::map<std::string, Enum>& choices,
                        const std::string& description) {
    std::vector<std::string> keys;
    for (const auto& [k, v] : choices) keys.push_back(k);
    return sub
        ->add_option_function<std::string>(
            name, [&target, &choices](const std::string& value) { target = choices.at(value); }, description)
        ->check(CLI::IsMember(keys));
}

void add_louvain_flags(CLI::App* sub, LouvainConfig& c) {
    sub->add_option("--resolution", c.resolution, "Modularity resolution")->check(CLI::PositiveNumber);
    sub->add_option("--min-gain", c.min_gain, "Stop once a sweep gains no more than this")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--max-passes", c.max_passes, "Maximum aggregation levels")->check(CLI::PositiveNumber);
}

void add_centrality_flags(CLI::App* sub, PowerIterationConfig& c) {
    add_choice(sub, "--mode", c.mode, kModes, "incoming|undirected");
    add_choice(sub, "--normalize", c.normalization, kNorms, "l1|max");
    sub->add_option("--tolerance", c.tolerance, "L-infinity convergence tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--max-iters", c.max_iters, "Power-iteration cap")->check(CLI::PositiveNumber);
    sub->add_option("--teleport", c.teleport, "Uniform teleport mass in [0, 1)")->check(CLI::Range(0.0, 0.999999));
}

void add_layout_flags(CLI::App* sub, LayoutConfig& c) {
    sub->add_option("--iterations", c.iterations, "ForceAtlas2 steps");
    add_choice(sub, "--barnes-hut", c.barnes_hut, kBarnesHut, "on|off|auto");
    sub->add_option("--theta", c.theta, "Barnes-Hut opening criterion")->check(CLI::PositiveNumber);
    sub->add_option("--gravity", c.gravity, "Gravity strength")->check(CLI::NonNegativeNumber);
    sub->add_option("--scaling", c.scaling, "Repulsion scaling")->check(CLI::PositiveNumber);
    sub->add_option("--edge-weight-influence", c.edge_weight_influence, "Exponent on edge weights")
        ->check(CLI::NonNegativeNumber);
}

struct TextFlags {
    std::string lexicon_pos, lexicon_neg, stopwords;
    TermOrder order = TermOrder::Count;
    std::size_t top = 0;
};

void add_text_flags(CLI::App* sub, TextFlags& t, bool top_flag) {
    sub->add_option("--lexicon-pos", t.lexicon_pos, "Positive opinion-lexicon word list");
    sub->add_option("--lexicon-neg", t.lexicon_neg, "Negative opinion-lexicon word list");
    sub->add_option("--stopwords", t.stopwords, "Stopword list, one per line");
    add_choice(sub, "--order", t.order, kOrders, "count|salience");
    if (top_flag) sub->add_option("--top", t.top, "Rows to keep (default all)");
}

struct DeviationFlags {
    DeviationConfig config;
    double bucket_seconds = 60.0;
    bool disabled = false;
};

void add_deviation_flags(CLI::App* sub, DeviationFlags& d) {
    add_choice(sub, "--deviation-metric", d.config.metric, kMetrics, "volume|mean_sentiment");
    sub->add_option("--window", d.config.window, "Rolling window in buckets")->check(CLI::Range(2, 1'000'000));
    sub->add_option("--z-threshold", d.config.z_threshold, "Alert threshold on |z|")->check(CLI::PositiveNumber);
    sub->add_option("--sigma-floor", d.config.sigma_floor, "Lower bound on the rolling deviation")
        ->check(CLI::PositiveNumber);
    sub->add_option("--bucket-seconds", d.bucket_seconds, "Bucket width")->check(CLI::PositiveNumber);
    sub->add_flag("--no-deviation", d.disabled, "Skip deviation detection");
}

std::chrono::milliseconds to_ms(double seconds) {
    return std::chrono::milliseconds{static_cast<std::int64_t>(seconds * 1000.0)};
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Interaction-graph analytics for social networking services", "snsgraph"};
    app.set_version_flag("--version", SNSGRAPH_VERSION);
    app.require_subcommand(1, 1);
    app.failure_message(CLI::FailureMessage::help);

    Options o;

    auto* ingest_cmd = app.add_subcommand("ingest", "Build the interaction graph of a corpus and write it as GEXF");
    add_input(ingest_cmd, o, true);
    add_output(ingest_cmd, o, "GEXF");

    LouvainConfig louvain_cfg;
    auto* communities_cmd = app.add_subcommand("communities", "Louvain communities as handle,community_id CSV");
    add_input(communities_cmd, o, false);
    add_output(communities_cmd, o, "CSV");
    add_louvain_flags(communities_cmd, louvain_cfg);
    communities_cmd->add_option("--seed", o.seed, "Global seed (default SNSGRAPH_SEED, else 0)");

    PowerIterationConfig centrality_cfg;
    std::size_t top_accounts = 0;
    auto* centrality_cmd = app.add_subcommand("centrality", "Eigenvector centrality as handle,eigenvector CSV");
    add_input(centrality_cmd, o, false);
    add_output(centrality_cmd, o, "CSV");
    add_centrality_flags(centrality_cmd, centrality_cfg);
    centrality_cmd->add_option("--top", top_accounts, "Rows to keep (default all)");

    TextFlags text_flags;
    auto* text_cmd = app.add_subcommand("text", "Term counts and salience as term,mention_count,salience CSV");
    add_input(text_cmd, o, true);
    add_output(text_cmd, o, "CSV");
    add_text_flags(text_cmd, text_flags, true);

    LayoutConfig layout_cfg;
    std::string layout_gexf;
    auto* layout_cmd = app.add_subcommand("layout", "ForceAtlas2 positions as handle,x,y CSV");
    add_input(layout_cmd, o, false);
    add_output(layout_cmd, o, "CSV");
    add_layout_flags(layout_cmd, layout_cfg);
    layout_cmd->add_option("--seed", o.seed, "Global seed (default SNSGRAPH_SEED, else 0)");
    layout_cmd->add_option("--gexf", layout_gexf, "Also write the graph with positions as GEXF");

    std::string collect_config;
    bool collect_once = false;
    double collect_duration = 0.0;
    auto* collect_cmd = app.add_subcommand("collect", "Poll configured sources into a record sink");
    collect_cmd->add_option("--config,-c", collect_config, "Collector JSON configuration")->required();
    collect_cmd->add_flag("--once", collect_once, "Poll every source once, then exit");
    collect_cmd->add_option("--duration", collect_duration, "Stop after this many seconds (default: until signalled)")
        ->check(CLI::PositiveNumber);

    PipelineConfig pipe;
    TextFlags report_text;
    DeviationFlags report_dev;
    auto* report_cmd = app.add_subcommand("report", "Full pipeline: redacted report plus GEXF and CSV tables");
    add_input(report_cmd, o, true);
    report_cmd->add_option("--out", pipe.out_dir, "Output directory")->required();
    report_cmd->add_option("--seed", o.seed, "Global seed (default SNSGRAPH_SEED, else 0)");
    report_cmd->add_option("--redact-allowlist", pipe.allowlist_path, "Handles exempt from redaction");
    report_cmd->add_option("--placeholder", pipe.redaction.placeholder, "Replacement for redacted handles");
    add_choice(report_cmd, "--format", pipe.format, kFormats, "json|text");
    report_cmd->add_option("--top-accounts", pipe.top_accounts, "Rows in the accounts table");
    report_cmd->add_option("--top-terms", pipe.top_terms, "Rows in the terms table");
    add_louvain_flags(report_cmd, pipe.louvain);
    add_centrality_flags(report_cmd, pipe.centrality);
    add_text_flags(report_cmd, report_text, false);
    add_layout_flags(report_cmd, pipe.layout);
    add_deviation_flags(report_cmd, report_dev);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const auto global_seed = resolve_global_seed(o.seed);

    if (ingest_cmd->parsed()) {
        auto input = load_input(o.input, o.topic, err);
        write_output(o.output, out, [&](std::ostream& s) { export_gexf(input.built.graph, s); });
        const auto& st = input.built.stats;
        err << fmt::format("{} records, {} accounts, {} connections, {} replies, {} mentions ({} from retweets), "
                           "{} follows, {} self-interactions dropped\n",
                           input.records.size(), input.built.graph.node_count(), input.built.graph.edge_count(),
                           st.reply_interactions, st.mention_interactions, st.retweet_mentions,
                           st.follow_interactions, st.self_loops_dropped);
    } else if (communities_cmd->parsed()) {
        louvain_cfg.seed = derive_seed(global_seed, kCommunitySeedName);
        louvain_cfg.validate();
        auto input = load_input(o.input, o.topic, err);
        const auto partition = louvain(input.built.graph, louvain_cfg);
        write_output(o.output, out, [&](std::ostream& s) { write_partition_csv(s, partition); });
        err << fmt::format("modularity {:.6f}, {} communities\n", partition.modularity_q, partition.community_count);
    } else if (centrality_cmd->parsed()) {
        centrality_cfg.validate();
        auto input = load_input(o.input, o.topic, err);
        const auto result = eigenvector_centrality(input.built.graph, centrality_cfg);
        if (!result.converged)
            err << fmt::format("warning: power iteration did not converge in {} iterations\n", result.iterations);
        write_output(o.output, out,
                     [&](std::ostream& s) { write_centrality_csv(s, ranking(result.vector, top_accounts)); });
    } else if (text_cmd->parsed()) {
        const auto lexicon = maybe_lexicon(text_flags.lexicon_pos, text_flags.lexicon_neg, err);
        auto input = load_input(o.input, o.topic, err);
        const auto stats = term_stats(input.records, maybe_stopwords(text_flags.stopwords));
        write_output(o.output, out, [&](std::ostream& s) {
            write_terms_csv(s, ordered_terms(stats, text_flags.order, text_flags.top));
        });
        if (lexicon) {
            const auto summary = corpus_sentiment(input.records, *lexicon);
            err << fmt::format("sentiment {:.6f} ({} positive, {} negative hits)\n", summary.score,
                               summary.positive_hits, summary.negative_hits);
        }
    } else if (layout_cmd->parsed()) {
        layout_cfg.seed = derive_seed(global_seed, kLayoutSeedName);
        layout_cfg.validate();
        auto input = load_input(o.input, o.topic, err);
        const auto frame = run_layout(input.built.graph, layout_cfg);
        write_output(o.output, out, [&](std::ostream& s) { write_layout_csv(s, frame); });
        if (!layout_gexf.empty())
            write_output(layout_gexf, out,
                         [&](std::ostream& s) { export_gexf(input.built.graph, s, GexfAnnotations{&frame, nullptr, nullptr}); });
    } else if (collect_cmd->parsed()) {
        Collector collector(load_collector_config(collect_config));
        CollectorSummary summary;
        if (collect_once) {
            summary = collector.run_once();
        } else {
            g_stop = false;
            auto previous_int = std::signal(SIGINT, on_signal);
            auto previous_term = std::signal(SIGTERM, on_signal);
            std::thread timer;
            std::atomic<bool> finished{false};
            if (collect_duration > 0.0) {
                timer = std::thread([&] {
                    const auto deadline = std::chrono::steady_clock::now() + to_ms(collect_duration);
                    while (!finished && std::chrono::steady_clock::now() < deadline)
                        std::this_thread::sleep_for(std::chrono::milliseconds{20});
                    g_stop = true;
                });
            }
            try {
                summary = collector.run(g_stop);
            } catch (...) {
                finished = true;
                if (timer.joinable()) timer.join();
                std::signal(SIGINT, previous_int);
                std::signal(SIGTERM, previous_term);
                throw;
            }
            finished = true;
            if (timer.joinable()) timer.join();
            std::signal(SIGINT, previous_int);
            std::signal(SIGTERM, previous_term);
        }
        for (const auto& d : summary.diagnostics)
            err << fmt::format("{}: {}{}\n", d.source_id, d.message, d.retryable ? " (will retry)" : "");
        out << fmt::format("{} polls, {} records written, {} duplicates dropped, {} source errors, {} alerts\n",
                           summary.polls, summary.records_written, summary.duplicates_dropped, summary.source_errors,
                           summary.alerts);
    } else if (report_cmd->parsed()) {
        pipe.input = o.input;
        pipe.topic = o.topic;
        pipe.global_seed = global_seed;
        pipe.lexicon_positive = report_text.lexicon_pos;
        pipe.lexicon_negative = report_text.lexicon_neg;
        pipe.stopwords = report_text.stopwords;
        pipe.term_order = report_text.order;
        pipe.deviation = report_dev.config;
        pipe.deviation.bucket_width = to_ms(report_dev.bucket_seconds);
        pipe.deviation_enabled = !report_dev.disabled;
        if (!pipe.allowlist_path.empty()) {
            auto placeholder = pipe.redaction.placeholder;
            pipe.redaction = load_redaction_policy_file(pipe.allowlist_path);
            pipe.redaction.placeholder = placeholder;
        }
        const auto report = run_pipeline(pipe, err);
        out << fmt::format("wrote {} ({} accounts, {} connections, Q = {:.6f}, {} communities, {} alerts)\n",
                           pipe.out_dir, report.corpus.node_count, report.corpus.edge_count, report.modularity_q,
                           report.community_count, report.alerts.size());
    }
    return kExitOk;
}

} // namespace

int run_subcommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const fs::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    }
}

} // namespace snsgraph::cli
