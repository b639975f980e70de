#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "snsgraph/handle.hpp"

namespace snsgraph {

/// Node -> community assignment. `nodes` is sorted; `community[i]` belongs to
/// `nodes[i]`. Ids are dense in [0, community_count).
struct Partition {
    std::vector<Handle> nodes;
    std::vector<std::uint32_t> community;
    std::uint32_t community_count = 0;
    double modularity_q = 0.0;

    /// Throws DataError for unknown handles.
    std::uint32_t community_of(const Handle& handle) const;

    friend bool operator==(const Partition&, const Partition&) = default;
};

/// Relabels ids in order of first appearance so they are dense. Returns the
/// number of distinct communities.
std::uint32_t densify(std::vector<std::uint32_t>& assignment);

enum class Normalization : std::uint8_t { L1, Max };

std::string_view to_string(Normalization n);
Normalization parse_normalization(std::string_view text);

struct CentralityVector {
    std::vector<Handle> nodes;
    std::vector<double> scores;
    Normalization normalization = Normalization::L1;

    double score_of(const Handle& handle) const;

    friend bool operator==(const CentralityVector&, const CentralityVector&) = default;
};

} // namespace snsgraph
