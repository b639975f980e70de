#include "snsgraph/handle.hpp"

#include <cctype>

#include "snsgraph/error.hpp"

namespace snsgraph {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

} // namespace

Handle::Handle(std::string_view raw) {
    raw = trim(raw);
    while (!raw.empty() && raw.front() == '@') raw.remove_prefix(1);
    if (raw.empty()) throw DataError("empty account handle");
    for (char c : raw)
        if (is_space(c)) throw DataError("account handle '" + std::string(raw) + "' contains whitespace");
    value_.reserve(raw.size());
    for (char c : raw) value_.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
}

Handle Handle::from_display_name(std::string_view name) {
    std::string out;
    bool pending_sep = false;
    for (char c : trim(name)) {
        if (is_space(c) || c == ',') {
            pending_sep = true;
            continue;
        }
        if (pending_sep && !out.empty()) out.push_back('_');
        pending_sep = false;
        out.push_back(c);
    }
    return Handle(out);
}

} // namespace snsgraph
