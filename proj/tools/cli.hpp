#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "snsgraph/centrality.hpp"
#include "snsgraph/community.hpp"
#include "snsgraph/deviation.hpp"
#include "snsgraph/layout.hpp"
#include "snsgraph/report.hpp"
#include "snsgraph/textmine.hpp"

namespace snsgraph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Everything the `report` subcommand needs. Module seeds are derived from
/// global_seed; the seed fields of `louvain` and `layout` are overwritten.
struct PipelineConfig {
    std::string input;
    std::string topic; ///< comma-separated tags; empty keeps every record
    std::string out_dir;
    LouvainConfig louvain;
    PowerIterationConfig centrality;
    LayoutConfig layout;
    DeviationConfig deviation;
    bool deviation_enabled = true;
    RedactionPolicy redaction;
    std::string allowlist_path;
    std::string lexicon_positive;
    std::string lexicon_negative;
    std::string stopwords;
    std::size_t top_accounts = 13;
    std::size_t top_terms = 10;
    TermOrder term_order = TermOrder::Count;
    ReportFormat format = ReportFormat::Json;
    std::uint64_t global_seed = 0;
};

/// Module names fed to derive_seed.
inline constexpr const char* kCommunitySeedName = "community";
inline constexpr const char* kLayoutSeedName = "layout";

/// Global seed from the flag, else SNSGRAPH_SEED, else 0.
std::uint64_t resolve_global_seed(std::optional<std::uint64_t> flag);

/**
 * ingest -> Louvain -> centrality -> text -> layout -> deviation, then writes
 * report.{json,txt} (redacted), graph.gexf, communities.csv, centrality.csv,
 * terms.csv, layout.csv and alerts.jsonl into out_dir. Returns the redacted
 * report. Throws snsgraph::Error subclasses.
 */
AnalysisReport run_pipeline(const PipelineConfig& config, std::ostream& log);

/// `args` excludes the program name: {"centrality", "--input", "g.gexf"}.
/// Exit codes: 0 success, 1 usage or configuration error, 2 data error.
int run_subcommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace snsgraph::cli
