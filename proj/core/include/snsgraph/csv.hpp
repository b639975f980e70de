#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "snsgraph/layout.hpp"
#include "snsgraph/model.hpp"
#include "snsgraph/textmine.hpp"

namespace snsgraph {

/// RFC 4180 field quoting: fields holding a comma, quote or line break are
/// quoted, embedded quotes doubled.
std::string csv_field(std::string_view text);

/// `handle,eigenvector` with handles in '@' form.
void write_centrality_csv(std::ostream& out, const std::vector<std::pair<Handle, double>>& rows);
/// `term,mention_count,salience`
void write_terms_csv(std::ostream& out, const std::vector<TermStats>& rows);
/// `handle,community_id`
void write_partition_csv(std::ostream& out, const Partition& partition);
/// `handle,x,y`
void write_layout_csv(std::ostream& out, const LayoutFrame& frame);

/// Splits one CSV line into unquoted fields. Throws ParseError on an
/// unterminated quote.
std::vector<std::string> split_csv_line(std::string_view line);

} // namespace snsgraph
