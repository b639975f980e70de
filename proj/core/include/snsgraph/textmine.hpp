#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "snsgraph/ingest.hpp"

namespace snsgraph {

/// Positive and negative opinion words, lowercase and disjoint.
struct Lexicon {
    std::unordered_set<std::string> positive;
    std::unordered_set<std::string> negative;
};

struct LoadedLexicon {
    Lexicon lexicon;
    std::vector<std::string> warnings;
};

/**
 * One word per line; blank lines and lines starting with ';' are skipped
 * (the format of the published opinion-lexicon word lists). A word present
 * in both lists is dropped from both with a warning.
 *
 * Throws IoError for failing streams and DataError when nothing is left.
 */
LoadedLexicon load_lexicon(std::istream& positive, std::istream& negative);
LoadedLexicon load_lexicon_files(const std::string& positive_path, const std::string& negative_path);

/// Same line format as the lexicon. Throws IoError.
std::set<std::string> load_stopwords(std::istream& in);
std::set<std::string> load_stopwords_file(const std::string& path);

/// Splits on anything that is not a letter or digit, lowercases, drops empty
/// tokens. '#' and '@' are separators, so "#GE2017" and "@UKLabour" become
/// bare tokens. UTF-8 aware; letters outside ASCII (Latin, Greek, Cyrillic,
/// CJK, Hangul) are kept and lowercased where a simple case mapping exists.
std::vector<std::string> tokenize(std::string_view text);

struct SentimentSummary {
    std::size_t positive_hits = 0;
    std::size_t negative_hits = 0;
    /// (pos - neg) / (pos + neg), 0 when there were no hits.
    double score = 0.0;
    bool neutral = true;

    friend bool operator==(const SentimentSummary&, const SentimentSummary&) = default;
};

SentimentSummary summarize_hits(std::size_t positive_hits, std::size_t negative_hits);
SentimentSummary sentiment(std::string_view text, const Lexicon& lexicon);
/// Hits pooled over every record's text.
SentimentSummary corpus_sentiment(const std::vector<InteractionRecord>& records, const Lexicon& lexicon);

struct TermStats {
    std::string term;
    std::uint64_t mention_count = 0; ///< token occurrences across the corpus
    std::uint64_t doc_frequency = 0; ///< records containing the term
    double salience = 0.0;

    friend bool operator==(const TermStats&, const TermStats&) = default;
};

/**
 * Per-term counts and entropy-contribution salience:
 *
 *   p(w) = df(w) / D,  s(w) = p ln(1/p),  salience(w) = s(w) / sum_v s(v)
 *
 * Terms present in every record get zero salience. When every term is, all
 * saliences are zero. Sorted by mention_count descending, ties by term.
 * Throws EmptyCorpusError for an empty corpus.
 */
std::vector<TermStats> term_stats(const std::vector<InteractionRecord>& corpus,
                                  const std::set<std::string>& stopwords = {});

enum class TermOrder : std::uint8_t { Count, Salience };

std::string_view to_string(TermOrder order);
TermOrder parse_term_order(std::string_view text);

/// Descending by the chosen key, ties by term. k == 0 is a ConfigError.
std::vector<TermStats> top_terms(const std::vector<TermStats>& stats, std::size_t k, TermOrder order);

} // namespace snsgraph
