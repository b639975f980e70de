#include "snsgraph/csv.hpp"

#include <fmt/format.h>

#include "snsgraph/error.hpp"

namespace snsgraph {

std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

namespace {

void finish(std::ostream& out) {
    out.flush();
    if (!out) throw IoError("CSV sink is not writable");
}

} // namespace

// Doubles are written in shortest round-trip form.
void write_centrality_csv(std::ostream& out, const std::vector<std::pair<Handle, double>>& rows) {
    out << "handle,eigenvector\n";
    for (const auto& [h, score] : rows) out << fmt::format("{},{}\n", csv_field(h.display()), score);
    finish(out);
}

void write_terms_csv(std::ostream& out, const std::vector<TermStats>& rows) {
    out << "term,mention_count,salience\n";
    for (const auto& t : rows) out << fmt::format("{},{},{}\n", csv_field(t.term), t.mention_count, t.salience);
    finish(out);
}

void write_partition_csv(std::ostream& out, const Partition& partition) {
    out << "handle,community_id\n";
    for (std::size_t i = 0; i < partition.nodes.size(); ++i)
        out << fmt::format("{},{}\n", csv_field(partition.nodes[i].display()), partition.community[i]);
    finish(out);
}

void write_layout_csv(std::ostream& out, const LayoutFrame& frame) {
    out << "handle,x,y\n";
    for (std::size_t i = 0; i < frame.nodes.size(); ++i)
        out << fmt::format("{},{},{}\n", csv_field(frame.nodes[i].display()), frame.positions[i].x,
                           frame.positions[i].y);
    finish(out);
}

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c != '"') {
                fields.back() += c;
            } else if (i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                ++i;
            } else {
                quoted = false;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else if (c != '\r') {
            fields.back() += c;
        }
    }
    if (quoted) throw ParseError("unterminated quote in CSV line");
    return fields;
}

} // namespace snsgraph
