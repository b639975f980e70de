#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>

namespace snsgraph {

/// Account identifier. Stored lowercase without the leading '@', so equality
/// is case-insensitive by construction.
class Handle {
public:
    /// Throws DataError when nothing remains after stripping '@' and surrounding
    /// whitespace, or when whitespace remains inside.
    explicit Handle(std::string_view raw);

    /// Builds a handle from a free-form author name ("Jane Doe" -> "jane_doe").
    static Handle from_display_name(std::string_view name);

    const std::string& value() const noexcept { return value_; }
    std::string display() const { return "@" + value_; }

    friend auto operator<=>(const Handle&, const Handle&) = default;
    friend bool operator==(const Handle&, const Handle&) = default;

private:
    std::string value_;
};

} // namespace snsgraph

template <>
struct std::hash<snsgraph::Handle> {
    std::size_t operator()(const snsgraph::Handle& h) const noexcept {
        return std::hash<std::string>{}(h.value());
    }
};
