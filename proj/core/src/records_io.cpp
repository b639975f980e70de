#include "snsgraph/records_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <json.hpp>

#include "json_records.hpp"
#include "snsgraph/error.hpp"
#include "xml_util.hpp"

namespace snsgraph {

namespace pt = boost::property_tree;
using nlohmann::json;

std::string_view to_string(RecordFormat format) { return format == RecordFormat::Json ? "json" : "xml"; }

RecordFormat parse_record_format(std::string_view text) {
    if (text == "json") return RecordFormat::Json;
    if (text == "xml") return RecordFormat::Xml;
    throw ConfigError("record format must be json or xml, got '" + std::string(text) + "'");
}

std::string to_json_line(const OutputRecord& record) {
    auto obj = detail::record_to_object(record.payload);
    obj["source_id"] = record.source_id;
    obj["fetched_at"] = format_rfc3339(record.fetched_at);
    return detail::dump_line(obj);
}

namespace {

std::string join_handles(const std::vector<Handle>& handles) {
    std::string out;
    for (const auto& h : handles) {
        if (!out.empty()) out.push_back(' ');
        out += h.value();
    }
    return out;
}

void simple(std::string& out, const char* name, std::string_view value) {
    out += '<';
    out += name;
    if (value.empty()) {
        out += "/>";
        return;
    }
    out += '>';
    out += detail::xml_escape(value);
    out += "</";
    out += name;
    out += '>';
}

std::vector<Handle> split_handles(const std::string& text) {
    std::vector<Handle> out;
    std::istringstream words(text);
    std::string w;
    while (words >> w) out.emplace_back(w);
    return out;
}

const pt::ptree& required_child(const pt::ptree& node, const char* name) {
    auto child = node.get_child_optional(pt::ptree::path_type(name, '\0'));
    if (!child) throw ParseError(std::string("record element lacks <") + name + ">");
    return *child;
}

OutputRecord record_from_element(const pt::ptree& node) {
    try {
        OutputRecord r;
        auto& p = r.payload;
        p.id = required_child(node, "id").data();
        if (p.id.empty()) throw ParseError("record element has an empty <id>");
        p.author = Handle(required_child(node, "author").data());
        p.text = required_child(node, "text").data();
        if (auto tags = node.get_child_optional("hashtags")) {
            for (const auto& [name, child] : *tags)
                if (name == "tag") {
                    auto norm = normalize_tag(child.data());
                    if (!norm.empty()) p.hashtags.push_back(std::move(norm));
                }
        }
        auto reply = detail::child_text(node, "in_reply_to");
        if (!std::all_of(reply.begin(), reply.end(), [](unsigned char c) { return std::isspace(c); }))
            p.in_reply_to = Handle(reply);
        p.mentions = split_handles(detail::child_text(node, "mentions"));
        p.follows = split_handles(detail::child_text(node, "follows"));
        p.timestamp = parse_rfc3339(required_child(node, "timestamp").data());
        r.source_id = required_child(node, "source_id").data();
        r.fetched_at = parse_rfc3339(required_child(node, "fetched_at").data());
        return r;
    } catch (const DataError& e) {
        throw ParseError(std::string("invalid record element: ") + e.what());
    }
}

} // namespace

std::string to_xml_element(const OutputRecord& record) {
    const auto& p = record.payload;
    std::string out = "<record>";
    simple(out, "id", p.id);
    simple(out, "author", p.author.value());
    simple(out, "text", p.text);
    if (p.hashtags.empty()) {
        out += "<hashtags/>";
    } else {
        out += "<hashtags>";
        for (const auto& t : p.hashtags) simple(out, "tag", t);
        out += "</hashtags>";
    }
    simple(out, "in_reply_to", p.in_reply_to ? p.in_reply_to->value() : std::string());
    simple(out, "mentions", join_handles(p.mentions));
    simple(out, "follows", join_handles(p.follows));
    simple(out, "timestamp", format_rfc3339(p.timestamp));
    simple(out, "source_id", record.source_id);
    simple(out, "fetched_at", format_rfc3339(record.fetched_at));
    out += "</record>";
    return out;
}

void emit(const OutputRecord& record, RecordFormat format, std::ostream& sink) {
    if (format == RecordFormat::Json)
        sink << to_json_line(record) << '\n';
    else
        sink << to_xml_element(record) << '\n';
    if (!sink) throw IoError("record sink is not writable");
}

OutputRecord output_record_from_json(std::string_view line) {
    json obj;
    try {
        obj = json::parse(line.begin(), line.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    OutputRecord r;
    r.payload = detail::record_from_object(obj);
    auto source = obj.find("source_id");
    auto fetched = obj.find("fetched_at");
    if (source == obj.end() || !source->is_string()) throw ParseError("missing string field 'source_id'");
    if (fetched == obj.end() || !fetched->is_string()) throw ParseError("missing string field 'fetched_at'");
    r.source_id = source->get<std::string>();
    r.fetched_at = parse_rfc3339(fetched->get<std::string>());
    return r;
}

std::vector<OutputRecord> parse_output_records_xml(std::istream& in) {
    const auto tree = detail::read_xml_document(in, "XML record document");
    std::vector<OutputRecord> out;
    for (const auto& [name, node] : tree) {
        if (name == "record") {
            out.push_back(record_from_element(node));
        } else if (name == "records") {
            for (const auto& [child_name, child] : node)
                if (child_name == "record") out.push_back(record_from_element(child));
        }
    }
    return out;
}

std::vector<OutputRecord> parse_output_records_json(std::istream& in) {
    if (!in) throw IoError("record stream is not readable");
    std::vector<OutputRecord> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) continue;
        try {
            out.push_back(output_record_from_json(line));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), number);
        }
    }
    return out;
}

RecordSink::RecordSink(std::ostream& out, RecordFormat format) : out_(out), format_(format) {
    if (format_ == RecordFormat::Xml) out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<records>\n";
    if (!out_) throw IoError("record sink is not writable");
}

RecordSink::~RecordSink() {
    try {
        close();
    } catch (...) {
    }
}

void RecordSink::write(const OutputRecord& record) {
    if (closed_) throw IoError("record sink already closed");
    emit(record, format_, out_);
    ++written_;
}

void RecordSink::close() {
    if (closed_) return;
    closed_ = true;
    if (format_ == RecordFormat::Xml) out_ << "</records>\n";
    out_.flush();
    if (!out_) throw IoError("record sink is not writable");
}

} // namespace snsgraph
