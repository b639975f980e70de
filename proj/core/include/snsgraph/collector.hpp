#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "snsgraph/deviation.hpp"
#include "snsgraph/records_io.hpp"
#include "snsgraph/textmine.hpp"

namespace snsgraph {

enum class SourceKind : std::uint8_t { File, Rss, HttpJson };

std::string_view to_string(SourceKind kind);
SourceKind parse_source_kind(std::string_view text);

struct SourceSpec {
    std::string id;
    SourceKind kind = SourceKind::File;
    /// Filesystem path, or an http:// / https:// URL for rss and http-json.
    std::string location;
    /// Ignored for file sources.
    std::chrono::milliseconds poll_interval{std::chrono::minutes{1}};

    /// Throws ConfigError.
    void validate() const;
};

struct SourceDiagnostic {
    std::string source_id;
    std::string message;
    bool retryable = false;
};

struct FetchResult {
    bool ok = false;
    std::string body;
    std::string error;
};

/// Returns a document body for a location; never throws for unreachable
/// locations, reporting them through FetchResult instead.
using Fetcher = std::function<FetchResult(const std::string& location)>;

/// Reads local paths; fetches http:// and https:// URLs (https only when
/// built with OpenSSL).
FetchResult default_fetch(const std::string& location);

/**
 * Maps an RSS 2.0, RSS 1.0 (RDF) or Atom document to records. Text is
 * title + " " + description (Atom: summary, else content). Author is the
 * item author, else the feed author, else the feed title, else the source
 * id. Ids are guid/id, else link, else a hash of the text. Hashtags and
 * @mentions are picked out of the text. Items without any text become
 * diagnostics. Throws ParseError when the document itself is malformed.
 */
std::vector<InteractionRecord> parse_feed(std::string_view document, const std::string& source_id,
                                          Timestamp fetched_at, std::vector<std::string>& diagnostics);

/// "#tag" occurrences, normalized and deduplicated in order of appearance.
std::vector<std::string> extract_hashtags(std::string_view text);
/// "@user" occurrences, deduplicated in order of appearance.
std::vector<Handle> extract_mentions(std::string_view text);

struct PollResult {
    std::vector<OutputRecord> records;
    std::vector<SourceDiagnostic> diagnostics;
    std::size_t duplicates_dropped = 0;
    /// The location could not be fetched; try again on the next poll.
    bool source_error = false;
};

/**
 * Polls one source, remembering item ids across polls so a record id is
 * emitted at most once. fetched_at never decreases between polls. A file
 * source is consumed by its first successful poll.
 */
class SourcePoller {
public:
    explicit SourcePoller(SourceSpec spec, Fetcher fetch = default_fetch,
                          std::function<Timestamp()> clock = now_utc);

    PollResult poll();

    const SourceSpec& spec() const noexcept { return spec_; }
    std::size_t duplicates_dropped() const noexcept { return duplicates_; }

private:
    SourceSpec spec_;
    Fetcher fetch_;
    std::function<Timestamp()> clock_;
    std::set<std::string> seen_;
    std::optional<Timestamp> last_fetch_;
    bool file_consumed_ = false;
    std::size_t duplicates_ = 0;
};

/// One-shot poll with a fresh dedup state.
PollResult poll_source(const SourceSpec& spec, const Fetcher& fetch = default_fetch);

struct CollectorConfig {
    std::vector<SourceSpec> sources;
    std::string sink_path;
    RecordFormat format = RecordFormat::Json;
    std::string alerts_path;
    DeviationConfig deviation;
    std::optional<std::string> lexicon_positive;
    std::optional<std::string> lexicon_negative;

    /// Throws ConfigError.
    void validate() const;
};

/**
 * JSON collector configuration:
 *
 *   {"sources": [{"id": "...", "kind": "file|rss|http-json", "location": "...",
 *                 "poll_interval_seconds": 60}],
 *    "sink": "records.jsonl", "format": "json|xml", "alerts": "alerts.jsonl",
 *    "deviation": {"metric": "volume|mean_sentiment", "window": 20,
 *                  "z_threshold": 3.0, "sigma_floor": 1e-6, "bucket_seconds": 60},
 *    "lexicon": {"positive": "...", "negative": "..."}}
 *
 * Relative paths resolve against `base_dir`. Throws ConfigError.
 */
CollectorConfig parse_collector_config(std::string_view json_text, const std::string& base_dir = ".");
CollectorConfig load_collector_config(const std::string& path);

struct CollectorSummary {
    std::size_t polls = 0;
    std::size_t records_written = 0;
    std::size_t duplicates_dropped = 0;
    std::size_t source_errors = 0;
    std::size_t alerts = 0;
    std::vector<SourceDiagnostic> diagnostics;
};

/**
 * Many producers, one writer: every source polls on its own thread and
 * schedule, and a single writer appends records to the sink and feeds the
 * deviation monitor, whose alerts go to a separate JSON-lines file.
 */
class Collector {
public:
    explicit Collector(CollectorConfig config, Fetcher fetch = default_fetch,
                       std::function<Timestamp()> clock = now_utc);

    /// Polls each source once, writes everything, flushes every bucket.
    CollectorSummary run_once();
    /// Polls until `stop` becomes true, then drains in-flight records.
    CollectorSummary run(const std::atomic<bool>& stop);

private:
    CollectorConfig config_;
    Fetcher fetch_;
    std::function<Timestamp()> clock_;
};

} // namespace snsgraph
