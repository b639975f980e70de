#include "snsgraph/report.hpp"

#include <fstream>
#include <unordered_set>

#include <fmt/format.h>
#include <json.hpp>

#include "snsgraph/error.hpp"

namespace snsgraph {

using nlohmann::json;

RedactionPolicy load_redaction_policy(std::istream& in) {
    if (!in) throw IoError("allowlist stream is not readable");
    RedactionPolicy policy;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            policy.allowlist.insert(Handle(line));
        } catch (const DataError& e) {
            throw DataError(fmt::format("allowlist line {}: {}", number, e.what()));
        }
    }
    if (in.bad()) throw IoError("allowlist stream failed while reading");
    return policy;
}

RedactionPolicy load_redaction_policy_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open allowlist '" + path + "'");
    return load_redaction_policy(in);
}

AnalysisReport assemble_report(const ReportInputs& in) {
    if (!in.records || !in.built || !in.partition || !in.centrality || !in.terms)
        throw ConfigError("report inputs are incomplete");

    AnalysisReport r;
    const auto& graph = in.built->graph;
    r.corpus.records_read = in.records_read;
    r.corpus.records_matched = in.records->size();
    r.corpus.parse_diagnostics = in.parse_diagnostics;
    r.corpus.node_count = graph.node_count();
    r.corpus.edge_count = graph.edge_count();
    r.corpus.total_weight = graph.total_weight();
    r.corpus.self_loops_dropped = in.built->stats.self_loops_dropped;

    r.modularity_q = in.partition->modularity_q;
    r.community_count = in.partition->community_count;
    r.centrality_converged = in.centrality->converged;
    r.centrality_iterations = in.centrality->iterations;

    if (in.top_accounts > 0 && !in.centrality->vector.nodes.empty())
        for (const auto& [handle, score] : top_k(in.centrality->vector, in.top_accounts))
            r.top_accounts.push_back({handle.display(), score, false});

    if (in.top_terms > 0 && !in.terms->empty()) {
        for (const auto& t : top_terms(*in.terms, in.top_terms, in.term_order)) {
            TermRow row{t.term, t.mention_count, t.salience, false, false};
            try {
                row.is_handle = graph.nodes().contains(Handle(t.term));
            } catch (const DataError&) {
            }
            r.top_terms.push_back(std::move(row));
        }
    }

    r.sentiment = in.sentiment;
    r.alerts = in.alerts;
    std::stable_sort(r.alerts.begin(), r.alerts.end(),
                     [](const AlertEvent& a, const AlertEvent& b) { return a.bucket < b.bucket; });
    r.metadata = in.metadata;
    try {
        r.metadata.config_json = json::parse(in.metadata.config_json).dump();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("configuration echo is not JSON: ") + e.what());
    }
    return r;
}

AnalysisReport redact(const AnalysisReport& report, const RedactionPolicy& policy) {
    AnalysisReport out = report;
    for (auto& row : out.top_accounts) {
        if (row.redacted) continue;
        bool keep = false;
        try {
            keep = policy.allows(Handle(row.handle));
        } catch (const DataError&) {
        }
        if (!keep) {
            row.handle = policy.placeholder;
            row.redacted = true;
        }
    }
    for (auto& row : out.top_terms) {
        if (!row.is_handle || row.redacted) continue;
        if (!policy.allows(Handle(row.term))) {
            row.term = policy.placeholder;
            row.redacted = true;
        }
    }
    return out;
}

std::string_view to_string(ReportFormat format) { return format == ReportFormat::Json ? "json" : "text"; }

ReportFormat parse_report_format(std::string_view text) {
    if (text == "json") return ReportFormat::Json;
    if (text == "text") return ReportFormat::Text;
    throw ConfigError("report format must be json or text, got '" + std::string(text) + "'");
}

namespace {

json to_json(const AnalysisReport& r) {
    json corpus = {{"records_read", r.corpus.records_read},
                   {"records_matched", r.corpus.records_matched},
                   {"parse_diagnostics", r.corpus.parse_diagnostics},
                   {"nodes", r.corpus.node_count},
                   {"edges", r.corpus.edge_count},
                   {"total_weight", r.corpus.total_weight},
                   {"self_loops_dropped", r.corpus.self_loops_dropped}};
    json accounts = json::array();
    for (const auto& a : r.top_accounts)
        accounts.push_back({{"handle", a.handle}, {"eigenvector", a.eigenvector}, {"redacted", a.redacted}});
    json terms = json::array();
    for (const auto& t : r.top_terms)
        terms.push_back({{"term", t.term},
                         {"mention_count", t.mention_count},
                         {"salience", t.salience},
                         {"is_handle", t.is_handle},
                         {"redacted", t.redacted}});
    json alerts = json::array();
    for (const auto& a : r.alerts) alerts.push_back(json::parse(alert_to_json(a)));
    json sentiment = nullptr;
    if (r.sentiment)
        sentiment = {{"positive_hits", r.sentiment->positive_hits},
                     {"negative_hits", r.sentiment->negative_hits},
                     {"score", r.sentiment->score},
                     {"neutral", r.sentiment->neutral}};
    json metadata = {{"tool_version", r.metadata.tool_version},
                     {"global_seed", r.metadata.global_seed},
                     {"community_seed", r.metadata.community_seed},
                     {"layout_seed", r.metadata.layout_seed},
                     {"config", json::parse(r.metadata.config_json)}};
    return {{"corpus", corpus},
            {"communities", {{"modularity_q", r.modularity_q}, {"community_count", r.community_count}}},
            {"centrality",
             {{"converged", r.centrality_converged}, {"iterations", r.centrality_iterations}}},
            {"top_accounts", accounts},
            {"top_terms", terms},
            {"sentiment", sentiment},
            {"alerts", alerts},
            {"metadata", metadata}};
}

std::string render_text(const AnalysisReport& r) {
    std::string out;
    auto line = [&out](std::string s) {
        out += s;
        out += '\n';
    };
    line("Corpus");
    line(fmt::format("  records read       {}", r.corpus.records_read));
    line(fmt::format("  records on topic   {}", r.corpus.records_matched));
    line(fmt::format("  skipped lines      {}", r.corpus.parse_diagnostics));
    line(fmt::format("  accounts (n)       {}", r.corpus.node_count));
    line(fmt::format("  connections (m)    {}", r.corpus.edge_count));
    line(fmt::format("  interactions       {}", r.corpus.total_weight));
    line("");
    line("Communities");
    line(fmt::format("  modularity Q       {:.6f}", r.modularity_q));
    line(fmt::format("  communities        {}", r.community_count));
    line("");
    line(fmt::format("Top accounts by eigenvector ({}, {} iterations)",
                     r.centrality_converged ? "converged" : "not converged", r.centrality_iterations));
    line(fmt::format("  {:<32} {:>12}", "handle", "eigenvector"));
    for (const auto& a : r.top_accounts) line(fmt::format("  {:<32} {:>12.6f}", a.handle, a.eigenvector));
    line("");
    line("Top words by count and salience");
    line(fmt::format("  {:<32} {:>13} {:>10}", "term", "mention_count", "salience"));
    for (const auto& t : r.top_terms)
        line(fmt::format("  {:<32} {:>13} {:>10.6f}", t.term, t.mention_count, t.salience));
    if (r.sentiment) {
        line("");
        line("Sentiment");
        line(fmt::format("  positive hits      {}", r.sentiment->positive_hits));
        line(fmt::format("  negative hits      {}", r.sentiment->negative_hits));
        line(fmt::format("  score              {:.6f}{}", r.sentiment->score, r.sentiment->neutral ? " (neutral)" : ""));
    }
    line("");
    line(fmt::format("Alerts ({})", r.alerts.size()));
    for (const auto& a : r.alerts)
        line(fmt::format("  {}  {:<14} observed {:.6g}  mean {:.6g}  z {:.3f}", format_rfc3339(a.bucket),
                         to_string(a.metric), a.observed, a.rolling_mean, a.z_score));
    line("");
    line("Generation");
    line(fmt::format("  version            {}", r.metadata.tool_version));
    line(fmt::format("  global seed        {}", r.metadata.global_seed));
    line(fmt::format("  community seed     {}", r.metadata.community_seed));
    line(fmt::format("  layout seed        {}", r.metadata.layout_seed));
    line(fmt::format("  config             {}", r.metadata.config_json));
    return out;
}

} // namespace

std::string render_report(const AnalysisReport& report, ReportFormat format) {
    if (format == ReportFormat::Text) return render_text(report);
    return to_json(report).dump(2) + "\n";
}

AnalysisReport report_from_json(std::string_view text) {
    try {
        const auto j = json::parse(text.begin(), text.end());
        AnalysisReport r;
        const auto& c = j.at("corpus");
        r.corpus.records_read = c.at("records_read").get<std::size_t>();
        r.corpus.records_matched = c.at("records_matched").get<std::size_t>();
        r.corpus.parse_diagnostics = c.at("parse_diagnostics").get<std::size_t>();
        r.corpus.node_count = c.at("nodes").get<std::size_t>();
        r.corpus.edge_count = c.at("edges").get<std::size_t>();
        r.corpus.total_weight = c.at("total_weight").get<std::uint64_t>();
        r.corpus.self_loops_dropped = c.at("self_loops_dropped").get<std::size_t>();
        r.modularity_q = j.at("communities").at("modularity_q").get<double>();
        r.community_count = j.at("communities").at("community_count").get<std::uint32_t>();
        r.centrality_converged = j.at("centrality").at("converged").get<bool>();
        r.centrality_iterations = j.at("centrality").at("iterations").get<std::size_t>();
        for (const auto& a : j.at("top_accounts"))
            r.top_accounts.push_back(
                {a.at("handle").get<std::string>(), a.at("eigenvector").get<double>(), a.at("redacted").get<bool>()});
        for (const auto& t : j.at("top_terms"))
            r.top_terms.push_back({t.at("term").get<std::string>(), t.at("mention_count").get<std::uint64_t>(),
                                   t.at("salience").get<double>(), t.at("is_handle").get<bool>(),
                                   t.at("redacted").get<bool>()});
        if (const auto& s = j.at("sentiment"); !s.is_null())
            r.sentiment = SentimentSummary{s.at("positive_hits").get<std::size_t>(),
                                           s.at("negative_hits").get<std::size_t>(), s.at("score").get<double>(),
                                           s.at("neutral").get<bool>()};
        for (const auto& a : j.at("alerts")) r.alerts.push_back(alert_from_json(a.dump()));
        const auto& m = j.at("metadata");
        r.metadata.tool_version = m.at("tool_version").get<std::string>();
        r.metadata.global_seed = m.at("global_seed").get<std::uint64_t>();
        r.metadata.community_seed = m.at("community_seed").get<std::uint64_t>();
        r.metadata.layout_seed = m.at("layout_seed").get<std::uint64_t>();
        r.metadata.config_json = m.at("config").dump();
        return r;
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid report: ") + e.what());
    }
}

} // namespace snsgraph
