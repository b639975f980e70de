#include "snsgraph/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <unordered_set>

#include <json.hpp>

#include "json_records.hpp"
#include "snsgraph/error.hpp"

namespace snsgraph {

using nlohmann::json;

std::string normalize_tag(std::string_view tag) {
    while (!tag.empty() && std::isspace(static_cast<unsigned char>(tag.front()))) tag.remove_prefix(1);
    while (!tag.empty() && std::isspace(static_cast<unsigned char>(tag.back()))) tag.remove_suffix(1);
    while (!tag.empty() && tag.front() == '#') tag.remove_prefix(1);
    std::string out(tag);
    for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

namespace detail {

namespace {

const json& require(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(std::string("missing field '") + key + "'");
    return *it;
}

std::string as_string(const json& value, const char* key) {
    if (!value.is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
    return value.get<std::string>();
}

Handle as_handle(const json& value, const char* key) {
    auto text = as_string(value, key);
    try {
        return Handle(text);
    } catch (const DataError&) {
        throw ParseError(std::string("field '") + key + "' is not a valid handle");
    }
}

std::vector<Handle> handle_list(const json& obj, const char* key) {
    std::vector<Handle> out;
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return out;
    if (!it->is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
    for (const auto& item : *it) out.push_back(as_handle(item, key));
    return out;
}

} // namespace

InteractionRecord record_from_object(const json& obj) {
    if (!obj.is_object()) throw ParseError("record must be a JSON object");
    InteractionRecord r;
    r.id = as_string(require(obj, "id"), "id");
    if (r.id.empty()) throw ParseError("field 'id' is empty");
    r.author = as_handle(require(obj, "author"), "author");
    r.text = as_string(require(obj, "text"), "text");

    if (auto it = obj.find("hashtags"); it != obj.end() && !it->is_null()) {
        if (!it->is_array()) throw ParseError("field 'hashtags' must be an array");
        for (const auto& tag : *it) {
            auto norm = normalize_tag(as_string(tag, "hashtags"));
            if (!norm.empty()) r.hashtags.push_back(std::move(norm));
        }
    }
    if (auto it = obj.find("in_reply_to"); it != obj.end() && !it->is_null())
        r.in_reply_to = as_handle(*it, "in_reply_to");
    r.mentions = handle_list(obj, "mentions");
    r.follows = handle_list(obj, "follows");
    if (auto it = obj.find("timestamp"); it != obj.end() && !it->is_null())
        r.timestamp = parse_rfc3339(as_string(*it, "timestamp"));
    return r;
}

json record_to_object(const InteractionRecord& r) {
    auto handles = [](const std::vector<Handle>& hs) {
        json arr = json::array();
        for (const auto& h : hs) arr.push_back(h.value());
        return arr;
    };
    json obj = json::object();
    obj["id"] = r.id;
    obj["author"] = r.author.value();
    obj["text"] = r.text;
    obj["hashtags"] = r.hashtags;
    obj["in_reply_to"] = r.in_reply_to ? json(r.in_reply_to->value()) : json(nullptr);
    obj["mentions"] = handles(r.mentions);
    obj["follows"] = handles(r.follows);
    obj["timestamp"] = format_rfc3339(r.timestamp);
    return obj;
}

std::string dump_line(const json& obj) {
    return obj.dump(-1, ' ', false, json::error_handler_t::replace);
}

} // namespace detail

InteractionRecord record_from_json(std::string_view line) {
    json obj;
    try {
        obj = json::parse(line.begin(), line.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return detail::record_from_object(obj);
}

std::string record_to_json(const InteractionRecord& record) {
    return detail::dump_line(detail::record_to_object(record));
}

ParsedCorpus parse_records(std::istream& in) {
    ParsedCorpus out;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); }))
            continue;
        try {
            auto record = record_from_json(line);
            if (!seen.insert(record.id).second) {
                out.diagnostics.push_back({number, "duplicate record id '" + record.id + "'"});
                continue;
            }
            out.records.push_back(std::move(record));
        } catch (const ParseError& e) {
            out.diagnostics.push_back({number, e.what()});
        }
    }
    if (in.bad()) throw IoError("failed while reading corpus stream");
    return out;
}

ParsedCorpus parse_corpus(std::istream& in) {
    if (!in) throw IoError("corpus stream is not readable");
    auto parsed = parse_records(in);
    if (parsed.records.empty())
        throw EmptyCorpusError("corpus contains no well-formed records (" +
                               std::to_string(parsed.diagnostics.size()) + " malformed lines)");
    return parsed;
}

ParsedCorpus parse_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open corpus '" + path + "'");
    return parse_corpus(in);
}

TopicFilter::TopicFilter(const std::vector<std::string>& tags) {
    for (const auto& t : tags) {
        auto norm = normalize_tag(t);
        if (!norm.empty()) tags_.insert(std::move(norm));
    }
    if (tags_.empty()) throw ConfigError("topic filter needs at least one tag");
}

TopicFilter TopicFilter::parse(std::string_view csv) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= csv.size()) {
        auto end = csv.find(',', start);
        if (end == std::string_view::npos) end = csv.size();
        parts.emplace_back(csv.substr(start, end - start));
        start = end + 1;
    }
    return TopicFilter(parts);
}

bool TopicFilter::matches(const InteractionRecord& record) const {
    return std::any_of(record.hashtags.begin(), record.hashtags.end(),
                       [&](const std::string& tag) { return tags_.contains(normalize_tag(tag)); });
}

std::vector<InteractionRecord> filter_topic(const std::vector<InteractionRecord>& records,
                                            const TopicFilter& filter) {
    std::vector<InteractionRecord> out;
    std::copy_if(records.begin(), records.end(), std::back_inserter(out),
                 [&](const InteractionRecord& r) { return filter.matches(r); });
    return out;
}

std::optional<Handle> retweeted_author(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    if (text.size() < 4) return std::nullopt;
    if (std::toupper(static_cast<unsigned char>(text[0])) != 'R' ||
        std::toupper(static_cast<unsigned char>(text[1])) != 'T')
        return std::nullopt;
    text.remove_prefix(2);
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    if (text.empty() || text.front() != '@') return std::nullopt;
    text.remove_prefix(1);
    std::size_t len = 0;
    while (len < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[len])) || text[len] == '_'))
        ++len;
    if (len == 0) return std::nullopt;
    return Handle(text.substr(0, len));
}

BuiltGraph build_graph(const std::vector<InteractionRecord>& records) {
    BuiltGraph out;
    auto& g = out.graph;
    auto& st = out.stats;
    st.records = records.size();

    auto add = [&](const Handle& from, const Handle& to, InteractionKind kind, std::size_t& counter) {
        if (g.add_edge(from, to, kind))
            ++counter;
        else
            ++st.self_loops_dropped;
    };

    for (const auto& r : records) {
        g.add_node(r.author);
        if (r.in_reply_to) add(r.author, *r.in_reply_to, InteractionKind::Reply, st.reply_interactions);
        for (const auto& m : r.mentions) add(r.author, m, InteractionKind::Mention, st.mention_interactions);
        if (auto original = retweeted_author(r.text);
            original && std::find(r.mentions.begin(), r.mentions.end(), *original) == r.mentions.end()) {
            auto before = st.mention_interactions;
            add(r.author, *original, InteractionKind::Mention, st.mention_interactions);
            if (st.mention_interactions != before) ++st.retweet_mentions;
        }
        for (const auto& f : r.follows) add(r.author, f, InteractionKind::Follow, st.follow_interactions);
    }
    return out;
}

} // namespace snsgraph
