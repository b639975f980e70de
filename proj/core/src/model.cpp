#include "snsgraph/model.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <unordered_map>

#include "snsgraph/error.hpp"

namespace snsgraph {

namespace {

std::size_t find_index(const std::vector<Handle>& nodes, const Handle& handle) {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), handle);
    if (it == nodes.end() || *it != handle)
        throw DataError("unknown account " + handle.display());
    return static_cast<std::size_t>(it - nodes.begin());
}

} // namespace

std::uint32_t Partition::community_of(const Handle& handle) const {
    return community[find_index(nodes, handle)];
}

std::uint32_t densify(std::vector<std::uint32_t>& assignment) {
    std::unordered_map<std::uint32_t, std::uint32_t> relabel;
    for (auto& c : assignment) {
        auto [it, inserted] = relabel.try_emplace(c, static_cast<std::uint32_t>(relabel.size()));
        c = it->second;
    }
    return static_cast<std::uint32_t>(relabel.size());
}

std::string_view to_string(Normalization n) { return n == Normalization::L1 ? "l1" : "max"; }

Normalization parse_normalization(std::string_view text) {
    std::string lower(text);
    for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower == "l1") return Normalization::L1;
    if (lower == "max") return Normalization::Max;
    throw ConfigError("normalization must be l1 or max, got '" + std::string(text) + "'");
}

double CentralityVector::score_of(const Handle& handle) const {
    return scores[find_index(nodes, handle)];
}

} // namespace snsgraph
