#pragma once

#include <cstdint>
#include <vector>

#include "snsgraph/graph.hpp"
#include "snsgraph/ingest.hpp"

namespace snsgraph::bench {

/// Planted partition: `n` nodes in `groups` equal blocks, average degree
/// `degree`, a share `inside` of edges within a block. Symmetric view.
WeightedAdjacency planted_partition(std::uint32_t n, std::uint32_t groups, double degree, double inside,
                                    std::uint64_t seed);

/// Directed random graph with a Hamiltonian cycle plus `extra` arcs per node.
WeightedAdjacency strongly_connected(std::uint32_t n, std::uint32_t extra, std::uint64_t seed);

/// Short posts over a 2000-word Zipf-like vocabulary.
std::vector<InteractionRecord> posts(std::size_t count, std::uint64_t seed);

} // namespace snsgraph::bench
