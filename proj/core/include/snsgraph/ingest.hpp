#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "snsgraph/graph.hpp"
#include "snsgraph/handle.hpp"
#include "snsgraph/time.hpp"

namespace snsgraph {

/// One authored post.
struct InteractionRecord {
    std::string id;
    Handle author{"unknown"};
    std::string text;
    std::vector<std::string> hashtags; ///< lowercase, no '#'
    std::optional<Handle> in_reply_to;
    std::vector<Handle> mentions;
    std::vector<Handle> follows;
    Timestamp timestamp{};

    friend bool operator==(const InteractionRecord&, const InteractionRecord&) = default;
};

/// Lowercases and strips leading '#'. Returns an empty string for "#" alone.
std::string normalize_tag(std::string_view tag);

/// Decodes one JSON-lines corpus line. Unknown fields are ignored.
/// Throws ParseError describing the first problem found.
InteractionRecord record_from_json(std::string_view line);
/// Single-line JSON in the corpus schema.
std::string record_to_json(const InteractionRecord& record);

struct ParseDiagnostic {
    std::size_t line = 0; ///< 1-based
    std::string reason;

    friend bool operator==(const ParseDiagnostic&, const ParseDiagnostic&) = default;
};

struct ParsedCorpus {
    std::vector<InteractionRecord> records;
    std::vector<ParseDiagnostic> diagnostics;
};

/// Reads every line; malformed lines and duplicate ids become diagnostics.
/// Never throws for bad content, only for a failing stream.
ParsedCorpus parse_records(std::istream& in);

/// parse_records plus the corpus contract: throws IoError when the stream is
/// unreadable and EmptyCorpusError when no line was well-formed.
ParsedCorpus parse_corpus(std::istream& in);
/// Opens `path` and calls parse_corpus.
ParsedCorpus parse_corpus_file(const std::string& path);

/// Non-empty set of topic tags, matched case-insensitively by exact equality.
class TopicFilter {
public:
    /// Accepts "GE2017", "#ge2017", ... Throws ConfigError when empty.
    explicit TopicFilter(const std::vector<std::string>& tags);
    /// Comma-separated list, as given on the command line.
    static TopicFilter parse(std::string_view csv);

    bool matches(const InteractionRecord& record) const;
    const std::set<std::string>& tags() const noexcept { return tags_; }

private:
    std::set<std::string> tags_;
};

/// Records whose hashtags intersect the filter, in input order.
std::vector<InteractionRecord> filter_topic(const std::vector<InteractionRecord>& records,
                                            const TopicFilter& filter);

struct IngestStats {
    std::size_t records = 0;
    std::size_t reply_interactions = 0;
    std::size_t mention_interactions = 0;
    std::size_t follow_interactions = 0;
    std::size_t retweet_mentions = 0; ///< mentions inferred from a leading "RT @user"
    std::size_t self_loops_dropped = 0;

    std::size_t interactions() const {
        return reply_interactions + mention_interactions + follow_interactions;
    }

    friend bool operator==(const IngestStats&, const IngestStats&) = default;
};

struct BuiltGraph {
    InteractionGraph graph;
    IngestStats stats;
};

/// The "@user" of a leading "RT @user" retweet marker, if any.
std::optional<Handle> retweeted_author(std::string_view text);

/**
 * author -> in_reply_to (Reply), author -> each mention (Mention),
 * author -> each follow (Follow). A retweet ("RT @user ...") whose original
 * author is not already listed in `mentions` adds one Mention to that author.
 * Every record author is a node. Self-interactions are dropped and counted.
 */
BuiltGraph build_graph(const std::vector<InteractionRecord>& records);

} // namespace snsgraph
