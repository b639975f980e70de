#pragma once

#include <string>

#include <json.hpp>

#include "snsgraph/ingest.hpp"

namespace snsgraph::detail {

InteractionRecord record_from_object(const nlohmann::json& obj);
nlohmann::json record_to_object(const InteractionRecord& record);
/// Compact single-line dump; invalid UTF-8 is replaced rather than thrown.
std::string dump_line(const nlohmann::json& obj);

} // namespace snsgraph::detail
