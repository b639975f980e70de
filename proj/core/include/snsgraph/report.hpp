#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "snsgraph/centrality.hpp"
#include "snsgraph/deviation.hpp"
#include "snsgraph/ingest.hpp"
#include "snsgraph/model.hpp"
#include "snsgraph/textmine.hpp"

namespace snsgraph {

/// Default-deny: only allowlisted handles survive redaction.
struct RedactionPolicy {
    std::set<Handle> allowlist;
    std::string placeholder = "retracted";

    bool allows(const Handle& handle) const { return allowlist.contains(handle); }
};

/// One handle per line; '#' starts a comment. Throws IoError or DataError.
RedactionPolicy load_redaction_policy(std::istream& in);
RedactionPolicy load_redaction_policy_file(const std::string& path);

struct CorpusSummary {
    std::size_t records_read = 0;
    std::size_t records_matched = 0; ///< after the topic filter
    std::size_t parse_diagnostics = 0;
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    std::uint64_t total_weight = 0;
    std::size_t self_loops_dropped = 0;

    friend bool operator==(const CorpusSummary&, const CorpusSummary&) = default;
};

struct AccountRow {
    std::string handle; ///< "@name", or the placeholder once redacted
    double eigenvector = 0.0;
    bool redacted = false;

    friend bool operator==(const AccountRow&, const AccountRow&) = default;
};

struct TermRow {
    std::string term;
    std::uint64_t mention_count = 0;
    double salience = 0.0;
    /// The term spells a graph account, so it is subject to redaction.
    bool is_handle = false;
    bool redacted = false;

    friend bool operator==(const TermRow&, const TermRow&) = default;
};

struct ReportMetadata {
    std::string tool_version;
    std::uint64_t global_seed = 0;
    std::uint64_t community_seed = 0;
    std::uint64_t layout_seed = 0;
    /// Compact JSON object echoing every configuration value used.
    std::string config_json = "{}";

    friend bool operator==(const ReportMetadata&, const ReportMetadata&) = default;
};

struct AnalysisReport {
    CorpusSummary corpus;
    double modularity_q = 0.0;
    std::uint32_t community_count = 0;
    bool centrality_converged = false;
    std::size_t centrality_iterations = 0;
    std::vector<AccountRow> top_accounts;
    std::vector<TermRow> top_terms;
    std::optional<SentimentSummary> sentiment;
    std::vector<AlertEvent> alerts; ///< bucket order
    ReportMetadata metadata;

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct ReportInputs {
    std::size_t records_read = 0;
    std::size_t parse_diagnostics = 0;
    const std::vector<InteractionRecord>* records = nullptr; ///< topic-filtered
    const BuiltGraph* built = nullptr;
    const Partition* partition = nullptr;
    const CentralityResult* centrality = nullptr;
    const std::vector<TermStats>* terms = nullptr;
    std::optional<SentimentSummary> sentiment;
    std::vector<AlertEvent> alerts;
    std::size_t top_accounts = 13;
    std::size_t top_terms = 10;
    TermOrder term_order = TermOrder::Count;
    ReportMetadata metadata;
};

/// Unredacted report. Throws ConfigError when a required input is missing.
AnalysisReport assemble_report(const ReportInputs& inputs);

/// Replaces every non-allowlisted handle by the placeholder. Numbers, row
/// order and row count are untouched; applying it twice changes nothing.
AnalysisReport redact(const AnalysisReport& report, const RedactionPolicy& policy);

enum class ReportFormat : std::uint8_t { Json, Text };

std::string_view to_string(ReportFormat format);
ReportFormat parse_report_format(std::string_view text);

std::string render_report(const AnalysisReport& report, ReportFormat format);
/// Inverse of the JSON rendering. Throws ParseError.
AnalysisReport report_from_json(std::string_view text);

} // namespace snsgraph
