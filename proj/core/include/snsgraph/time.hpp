#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace snsgraph {

/// UTC instant with millisecond resolution.
using Timestamp = std::chrono::sys_time<std::chrono::milliseconds>;

/// "2017-04-21T09:30:00Z", "2017-04-21T10:30:00.250+01:00", ... Fractions
/// beyond milliseconds are truncated. Throws ParseError.
Timestamp parse_rfc3339(std::string_view text);

/// Always UTC with a 'Z' suffix; milliseconds are printed only when non-zero.
std::string format_rfc3339(Timestamp t);

/// RSS pubDate form, e.g. "Fri, 21 Apr 2017 09:30:00 GMT" or "+0100" offsets.
std::optional<Timestamp> parse_rfc822(std::string_view text);

Timestamp now_utc();

} // namespace snsgraph
