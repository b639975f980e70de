#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>
#include <httplib.h>

#include "snsgraph/collector.hpp"
#include "snsgraph/error.hpp"
#include "snsgraph/seed.hpp"
#include "xml_util.hpp"

namespace snsgraph {

namespace pt = boost::property_tree;

std::string_view to_string(SourceKind kind) {
    switch (kind) {
    case SourceKind::File: return "file";
    case SourceKind::Rss: return "rss";
    case SourceKind::HttpJson: return "http-json";
    }
    return "file";
}

SourceKind parse_source_kind(std::string_view text) {
    if (text == "file") return SourceKind::File;
    if (text == "rss") return SourceKind::Rss;
    if (text == "http-json") return SourceKind::HttpJson;
    throw ConfigError("source kind must be file, rss or http-json, got '" + std::string(text) + "'");
}

void SourceSpec::validate() const {
    if (id.empty()) throw ConfigError("source id must not be empty");
    if (location.empty()) throw ConfigError("source '" + id + "' has no location");
    if (kind != SourceKind::File && poll_interval.count() <= 0)
        throw ConfigError("source '" + id + "' needs a positive poll interval");
}

namespace {

bool is_url(std::string_view location) {
    return location.starts_with("http://") || location.starts_with("https://");
}

FetchResult fetch_url(const std::string& url) {
    const auto scheme_end = url.find("://");
    const auto path_start = url.find('/', scheme_end + 3);
    const std::string origin = url.substr(0, path_start);
    const std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);

    httplib::Client client(origin);
    if (!client.is_valid()) return {false, {}, "unsupported URL '" + url + "'"};
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    client.set_follow_location(true);
    auto res = client.Get(path);
    if (!res) return {false, {}, "fetching '" + url + "' failed: " + httplib::to_string(res.error())};
    if (res->status < 200 || res->status >= 300)
        return {false, {}, fmt::format("fetching '{}' returned HTTP {}", url, res->status)};
    return {true, res->body, {}};
}

bool is_tag_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string trimmed(std::string s) {
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

// "jdoe@example.com (Jane Doe)" -> "Jane Doe"
std::string author_name(std::string raw) {
    raw = trimmed(std::move(raw));
    const auto open = raw.find('(');
    const auto close = raw.rfind(')');
    if (open != std::string::npos && close != std::string::npos && close > open + 1)
        return trimmed(raw.substr(open + 1, close - open - 1));
    return raw;
}

std::string first_of(const pt::ptree& node, std::initializer_list<const char*> names) {
    for (const char* name : names) {
        auto text = trimmed(detail::child_text(node, name));
        if (!text.empty()) return text;
    }
    return {};
}

std::string atom_author(const pt::ptree& node) {
    if (auto author = node.get_child_optional("author")) return trimmed(detail::child_text(*author, "name"));
    return {};
}

std::string atom_link(const pt::ptree& node) {
    for (const auto& [name, child] : node)
        if (name == "link") {
            auto href = detail::attribute(child, "href");
            if (!href.empty()) return href;
        }
    return {};
}

struct FeedItem {
    std::string id, title, body, author, date;
    bool atom = false;
};

} // namespace

FetchResult default_fetch(const std::string& location) {
    if (is_url(location)) return fetch_url(location);
    std::ifstream in(location, std::ios::binary);
    if (!in) return {false, {}, "cannot open '" + location + "'"};
    std::ostringstream body;
    body << in.rdbuf();
    return {true, body.str(), {}};
}

std::vector<std::string> extract_hashtags(std::string_view text) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '#' || (i > 0 && is_tag_char(text[i - 1]))) continue;
        std::size_t j = i + 1;
        while (j < text.size() && is_tag_char(text[j])) ++j;
        if (j == i + 1) continue;
        auto tag = normalize_tag(text.substr(i + 1, j - i - 1));
        if (std::find(out.begin(), out.end(), tag) == out.end()) out.push_back(std::move(tag));
        i = j - 1;
    }
    return out;
}

std::vector<Handle> extract_mentions(std::string_view text) {
    std::vector<Handle> out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '@' || (i > 0 && is_tag_char(text[i - 1]))) continue;
        std::size_t j = i + 1;
        while (j < text.size() && is_tag_char(text[j])) ++j;
        if (j == i + 1) continue;
        Handle h(text.substr(i + 1, j - i - 1));
        if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(std::move(h));
        i = j - 1;
    }
    return out;
}

std::vector<InteractionRecord> parse_feed(std::string_view document, const std::string& source_id,
                                          Timestamp fetched_at, std::vector<std::string>& diagnostics) {
    std::istringstream in{std::string(document)};
    const auto tree = detail::read_xml_document(in, "feed");

    std::vector<FeedItem> items;
    std::string feed_author;
    std::string feed_title;
    if (auto rss = tree.get_child_optional("rss")) {
        auto channel = rss->get_child_optional("channel");
        if (!channel) throw ParseError("RSS document has no <channel>");
        feed_author = author_name(first_of(*channel, {"managingEditor", "dc:creator", "author"}));
        feed_title = trimmed(detail::child_text(*channel, "title"));
        for (const auto& [name, item] : *channel) {
            if (name != "item") continue;
            items.push_back({first_of(item, {"guid", "link"}), detail::child_text(item, "title"),
                             detail::child_text(item, "description"),
                             author_name(first_of(item, {"author", "dc:creator"})),
                             first_of(item, {"pubDate", "dc:date"}), false});
        }
    } else if (auto rdf = tree.get_child_optional("rdf:RDF")) {
        if (auto channel = rdf->get_child_optional("channel")) {
            feed_author = author_name(first_of(*channel, {"dc:creator", "dc:publisher"}));
            feed_title = trimmed(detail::child_text(*channel, "title"));
        }
        for (const auto& [name, item] : *rdf) {
            if (name != "item") continue;
            auto id = detail::attribute(item, "rdf:about");
            if (id.empty()) id = first_of(item, {"link"});
            items.push_back({id, detail::child_text(item, "title"), detail::child_text(item, "description"),
                             author_name(first_of(item, {"dc:creator"})), first_of(item, {"dc:date"}), false});
        }
    } else if (auto feed = tree.get_child_optional("feed")) {
        feed_author = atom_author(*feed);
        feed_title = trimmed(detail::child_text(*feed, "title"));
        for (const auto& [name, entry] : *feed) {
            if (name != "entry") continue;
            auto id = first_of(entry, {"id"});
            if (id.empty()) id = atom_link(entry);
            auto body = detail::child_text(entry, "summary");
            if (body.empty()) body = detail::child_text(entry, "content");
            items.push_back({id, detail::child_text(entry, "title"), body, atom_author(entry),
                             first_of(entry, {"published", "updated"}), true});
        }
    } else {
        throw ParseError("document is neither RSS nor Atom");
    }

    std::vector<InteractionRecord> out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        auto& item = items[i];
        auto title = trimmed(item.title);
        auto body = trimmed(item.body);
        if (title.empty() && body.empty()) {
            diagnostics.push_back(fmt::format("item {} has neither title nor description", i + 1));
            continue;
        }
        InteractionRecord r;
        r.text = title.empty() ? body : body.empty() ? title : title + " " + body;
        r.id = item.id.empty() ? fmt::format("{:016x}", fnv1a64(r.text)) : item.id;

        std::string author = !item.author.empty() ? item.author : !feed_author.empty() ? feed_author
                                                              : !feed_title.empty()  ? feed_title
                                                                                     : source_id;
        try {
            r.author = Handle::from_display_name(author);
        } catch (const DataError&) {
            r.author = Handle::from_display_name(source_id);
        }

        r.timestamp = fetched_at;
        if (!item.date.empty()) {
            // RSS uses RFC 822 dates, but dc:date and Atom carry RFC 3339.
            auto parsed = item.atom ? std::nullopt : parse_rfc822(item.date);
            if (!parsed) {
                try {
                    parsed = parse_rfc3339(item.date);
                } catch (const ParseError&) {
                }
            }
            if (parsed)
                r.timestamp = *parsed;
            else
                diagnostics.push_back(fmt::format("item {} has an unreadable date '{}'", i + 1, item.date));
        }
        r.hashtags = extract_hashtags(r.text);
        for (auto& m : extract_mentions(r.text))
            if (m != r.author) r.mentions.push_back(std::move(m));
        out.push_back(std::move(r));
    }
    return out;
}

SourcePoller::SourcePoller(SourceSpec spec, Fetcher fetch, std::function<Timestamp()> clock)
    : spec_(std::move(spec)), fetch_(std::move(fetch)), clock_(std::move(clock)) {
    spec_.validate();
}

PollResult SourcePoller::poll() {
    PollResult result;
    if (spec_.kind == SourceKind::File && file_consumed_) return result;

    auto fetched_at = clock_();
    if (last_fetch_ && fetched_at < *last_fetch_) fetched_at = *last_fetch_;
    last_fetch_ = fetched_at;

    const auto body = fetch_(spec_.location);
    if (!body.ok) {
        result.source_error = true;
        result.diagnostics.push_back({spec_.id, body.error, true});
        return result;
    }

    std::vector<InteractionRecord> records;
    if (spec_.kind == SourceKind::Rss) {
        std::vector<std::string> notes;
        try {
            records = parse_feed(body.body, spec_.id, fetched_at, notes);
        } catch (const ParseError& e) {
            notes.push_back(e.what());
        }
        for (auto& n : notes) result.diagnostics.push_back({spec_.id, std::move(n), false});
    } else {
        std::istringstream in(body.body);
        auto parsed = parse_records(in);
        records = std::move(parsed.records);
        for (const auto& d : parsed.diagnostics)
            result.diagnostics.push_back({spec_.id, fmt::format("line {}: {}", d.line, d.reason), false});
        if (spec_.kind == SourceKind::File) file_consumed_ = true;
    }

    for (auto& r : records) {
        if (!seen_.insert(r.id).second) {
            ++result.duplicates_dropped;
            continue;
        }
        result.records.push_back(OutputRecord{spec_.id, fetched_at, std::move(r)});
    }
    duplicates_ += result.duplicates_dropped;
    return result;
}

PollResult poll_source(const SourceSpec& spec, const Fetcher& fetch) {
    SourcePoller poller(spec, fetch);
    return poller.poll();
}

} // namespace snsgraph
