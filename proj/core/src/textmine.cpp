#include "snsgraph/textmine.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <unordered_map>

#include "snsgraph/error.hpp"

namespace snsgraph {

namespace {

std::set<std::string> read_word_list(std::istream& in, const char* what) {
    if (!in) throw IoError(std::string(what) + " stream is not readable");
    std::set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        std::string_view w(line);
        while (!w.empty() && std::isspace(static_cast<unsigned char>(w.front()))) w.remove_prefix(1);
        while (!w.empty() && std::isspace(static_cast<unsigned char>(w.back()))) w.remove_suffix(1);
        if (w.empty() || w.front() == ';') continue;
        std::string word(w);
        for (auto& c : word) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        words.insert(std::move(word));
    }
    if (in.bad()) throw IoError(std::string("failed while reading ") + what);
    return words;
}

// Decodes one UTF-8 sequence at `pos`; malformed bytes decode to U+FFFD.
char32_t decode(std::string_view s, std::size_t& pos) {
    const auto b0 = static_cast<unsigned char>(s[pos]);
    auto cont = [&](std::size_t i) -> int {
        if (pos + i >= s.size()) return -1;
        const auto b = static_cast<unsigned char>(s[pos + i]);
        return (b & 0xC0) == 0x80 ? (b & 0x3F) : -1;
    };
    if (b0 < 0x80) {
        pos += 1;
        return b0;
    }
    int len = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        pos += 1;
        return 0xFFFD;
    }
    for (int i = 1; i < len; ++i) {
        const int c = cont(static_cast<std::size_t>(i));
        if (c < 0) {
            pos += 1;
            return 0xFFFD;
        }
        cp = (cp << 6) | static_cast<char32_t>(c);
    }
    pos += static_cast<std::size_t>(len);
    return cp;
}

void encode(char32_t cp, std::string& out) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

bool is_word_char(char32_t cp) {
    if (cp < 0x80) return std::isalnum(static_cast<int>(cp)) != 0;
    if (cp >= 0xC0 && cp <= 0x24F) return cp != 0xD7 && cp != 0xF7; // Latin-1 letters, Latin Extended-A/B
    if (cp >= 0x370 && cp <= 0x3FF) return cp != 0x37E && cp != 0x387; // Greek
    if (cp >= 0x400 && cp <= 0x4FF) return true;                     // Cyrillic
    if (cp >= 0x3040 && cp <= 0x30FF) return true;                   // Hiragana, Katakana
    if (cp >= 0x4E00 && cp <= 0x9FFF) return true;                   // CJK unified ideographs
    if (cp >= 0xAC00 && cp <= 0xD7AF) return true;                   // Hangul syllables
    return false;
}

char32_t to_lower(char32_t cp) {
    if (cp < 0x80) return static_cast<char32_t>(std::tolower(static_cast<int>(cp)));
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
    if (cp >= 0x100 && cp <= 0x137) return cp | 1;
    if (cp >= 0x139 && cp <= 0x148) return (cp & 1) ? cp + 1 : cp;
    if (cp >= 0x14A && cp <= 0x177) return cp | 1;
    if (cp == 0x178) return 0xFF;
    if (cp >= 0x179 && cp <= 0x17E) return (cp & 1) ? cp + 1 : cp;
    if (cp == 0x386) return 0x3AC;
    if (cp >= 0x388 && cp <= 0x38A) return cp + 0x25;
    if (cp == 0x38C) return 0x3CC;
    if (cp == 0x38E || cp == 0x38F) return cp + 0x3F;
    if (cp >= 0x391 && cp <= 0x3AB && cp != 0x3A2) return cp + 0x20;
    if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;
    if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
    return cp;
}

} // namespace

LoadedLexicon load_lexicon(std::istream& positive, std::istream& negative) {
    auto pos = read_word_list(positive, "positive lexicon");
    auto neg = read_word_list(negative, "negative lexicon");

    LoadedLexicon out;
    for (const auto& w : pos) {
        if (neg.contains(w)) {
            out.warnings.push_back("'" + w + "' is listed as both positive and negative; dropped from both");
            continue;
        }
        out.lexicon.positive.insert(w);
    }
    for (const auto& w : neg)
        if (!pos.contains(w)) out.lexicon.negative.insert(w);

    if (out.lexicon.positive.empty() && out.lexicon.negative.empty())
        throw DataError("opinion lexicon is empty");
    return out;
}

LoadedLexicon load_lexicon_files(const std::string& positive_path, const std::string& negative_path) {
    std::ifstream pos(positive_path);
    if (!pos) throw IoError("cannot open lexicon '" + positive_path + "'");
    std::ifstream neg(negative_path);
    if (!neg) throw IoError("cannot open lexicon '" + negative_path + "'");
    return load_lexicon(pos, neg);
}

std::set<std::string> load_stopwords(std::istream& in) { return read_word_list(in, "stopword list"); }

std::set<std::string> load_stopwords_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open stopword list '" + path + "'");
    return load_stopwords(in);
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const char32_t cp = decode(text, pos);
        if (is_word_char(cp)) {
            encode(to_lower(cp), current);
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

SentimentSummary summarize_hits(std::size_t positive_hits, std::size_t negative_hits) {
    SentimentSummary s;
    s.positive_hits = positive_hits;
    s.negative_hits = negative_hits;
    const auto total = positive_hits + negative_hits;
    s.neutral = total == 0;
    s.score = s.neutral ? 0.0
                        : (static_cast<double>(positive_hits) - static_cast<double>(negative_hits)) /
                              static_cast<double>(total);
    return s;
}

SentimentSummary sentiment(std::string_view text, const Lexicon& lexicon) {
    std::size_t pos = 0, neg = 0;
    for (const auto& token : tokenize(text)) {
        if (lexicon.positive.contains(token))
            ++pos;
        else if (lexicon.negative.contains(token))
            ++neg;
    }
    return summarize_hits(pos, neg);
}

SentimentSummary corpus_sentiment(const std::vector<InteractionRecord>& records, const Lexicon& lexicon) {
    std::size_t pos = 0, neg = 0;
    for (const auto& r : records) {
        auto s = sentiment(r.text, lexicon);
        pos += s.positive_hits;
        neg += s.negative_hits;
    }
    return summarize_hits(pos, neg);
}

std::vector<TermStats> term_stats(const std::vector<InteractionRecord>& corpus,
                                  const std::set<std::string>& stopwords) {
    if (corpus.empty()) throw EmptyCorpusError("term statistics need at least one record");

    std::map<std::string, TermStats> by_term;
    std::unordered_map<std::string, std::size_t> last_seen;
    for (std::size_t doc = 0; doc < corpus.size(); ++doc) {
        for (auto& token : tokenize(corpus[doc].text)) {
            if (stopwords.contains(token)) continue;
            auto& entry = by_term[token];
            ++entry.mention_count;
            auto [it, fresh] = last_seen.try_emplace(token, doc);
            if (fresh || it->second != doc) {
                ++entry.doc_frequency;
                it->second = doc;
            }
        }
    }

    const double docs = static_cast<double>(corpus.size());
    std::vector<TermStats> out;
    out.reserve(by_term.size());
    double total = 0.0;
    for (auto& [term, entry] : by_term) {
        entry.term = term;
        const double p = static_cast<double>(entry.doc_frequency) / docs;
        entry.salience = entry.doc_frequency == corpus.size() ? 0.0 : p * std::log(1.0 / p);
        total += entry.salience;
        out.push_back(std::move(entry));
    }
    if (total > 0.0)
        for (auto& e : out) e.salience /= total;

    std::stable_sort(out.begin(), out.end(), [](const TermStats& a, const TermStats& b) {
        return a.mention_count > b.mention_count;
    });
    return out;
}

std::string_view to_string(TermOrder order) { return order == TermOrder::Count ? "count" : "salience"; }

TermOrder parse_term_order(std::string_view text) {
    if (text == "count") return TermOrder::Count;
    if (text == "salience") return TermOrder::Salience;
    throw ConfigError("term order must be count or salience, got '" + std::string(text) + "'");
}

std::vector<TermStats> top_terms(const std::vector<TermStats>& stats, std::size_t k, TermOrder order) {
    if (k == 0) throw ConfigError("top_terms needs k >= 1");
    std::vector<TermStats> sorted = stats;
    std::sort(sorted.begin(), sorted.end(), [order](const TermStats& a, const TermStats& b) {
        if (order == TermOrder::Count) {
            if (a.mention_count != b.mention_count) return a.mention_count > b.mention_count;
        } else if (a.salience != b.salience) {
            return a.salience > b.salience;
        }
        return a.term < b.term;
    });
    if (sorted.size() > k) sorted.resize(k);
    return sorted;
}

} // namespace snsgraph
