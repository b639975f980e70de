#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "snsgraph/layout.hpp"

namespace snsgraph::detail {

/// Barnes-Hut tree over weighted points, built top-down like the
/// ForceAtlas2 reference: every region splits into up to four subregions
/// around its mass centre, and its size is twice the largest distance from
/// the mass centre to one of its bodies.
class QuadTree {
public:
    QuadTree(std::span<const Point> positions, std::span<const double> masses);

    /// Approximate repulsion kr * m_i * m_j / d summed over all j != i. A
    /// region not containing i is treated as one body at its mass centre
    /// when size / distance < theta.
    Point repulsion(std::uint32_t i, double kr, double theta) const;

private:
    struct Region {
        std::uint32_t begin = 0, end = 0; ///< range of order_
        double mass = 0.0;
        double cx = 0.0, cy = 0.0;
        double size = 0.0;
        std::uint32_t first_child = 0;
        std::uint32_t child_count = 0;
    };

    void build(std::size_t region, int depth);

    std::span<const Point> pos_;
    std::span<const double> mass_;
    std::vector<std::uint32_t> order_; ///< bodies grouped by region
    std::vector<std::uint32_t> slot_;  ///< inverse of order_
    std::vector<Region> regions_;
};

} // namespace snsgraph::detail
