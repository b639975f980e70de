#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "snsgraph/ingest.hpp"
#include "snsgraph/time.hpp"

namespace snsgraph {

/// A collected record tagged with its source and fetch time.
struct OutputRecord {
    std::string source_id;
    Timestamp fetched_at{};
    InteractionRecord payload;

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

enum class RecordFormat : std::uint8_t { Json, Xml };

std::string_view to_string(RecordFormat format);
RecordFormat parse_record_format(std::string_view text);

/// Corpus schema plus `source_id` and `fetched_at`, on one line.
std::string to_json_line(const OutputRecord& record);
/// A `<record>` element. List fields: `<hashtags>` holds `<tag>` children;
/// `<mentions>` and `<follows>` hold space-separated handles; an empty
/// `<in_reply_to/>` means none.
std::string to_xml_element(const OutputRecord& record);

/// Writes one record (JSON: one line; XML: one element and a newline).
/// Throws IoError when the sink is in a failed state afterwards.
void emit(const OutputRecord& record, RecordFormat format, std::ostream& sink);

/// Throws ParseError.
OutputRecord output_record_from_json(std::string_view line);
/// Reads a `<records>` document or a bare sequence of `<record>` elements.
/// Throws ParseError.
std::vector<OutputRecord> parse_output_records_xml(std::istream& in);
/// One record per non-blank line. Throws ParseError naming the line.
std::vector<OutputRecord> parse_output_records_json(std::istream& in);

/**
 * Sink owning the document framing: XML output is wrapped in a `<records>`
 * element that is closed by close() or the destructor.
 */
class RecordSink {
public:
    RecordSink(std::ostream& out, RecordFormat format);
    ~RecordSink();
    RecordSink(const RecordSink&) = delete;
    RecordSink& operator=(const RecordSink&) = delete;

    void write(const OutputRecord& record);
    void close();
    std::size_t written() const noexcept { return written_; }

private:
    std::ostream& out_;
    RecordFormat format_;
    bool closed_ = false;
    std::size_t written_ = 0;
};

} // namespace snsgraph
