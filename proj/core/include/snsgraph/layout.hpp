#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "snsgraph/graph.hpp"

namespace snsgraph {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

enum class BarnesHutMode : std::uint8_t { Auto, On, Off };

std::string_view to_string(BarnesHutMode mode);
BarnesHutMode parse_barnes_hut_mode(std::string_view text);

struct LayoutConfig {
    double scaling = 2.0;               ///< kr, repulsion strength
    double gravity = 1.0;               ///< kg, pull toward the origin
    double edge_weight_influence = 1.0; ///< delta in w^delta
    BarnesHutMode barnes_hut = BarnesHutMode::Auto;
    double theta = 1.2;
    double jitter_tolerance = 1.0;
    std::size_t iterations = 1000;
    std::uint64_t seed = 0;

    /// Auto switches the quadtree on above this many nodes.
    static constexpr std::size_t kBarnesHutAutoThreshold = 1000;

    void validate() const;
    bool use_barnes_hut(std::size_t node_count) const;
};

/// Positions plus the adaptive-speed state carried between steps.
struct LayoutFrame {
    std::vector<Handle> nodes;
    std::vector<Point> positions;
    std::vector<Point> previous_forces;
    std::size_t iteration = 0;
    double global_speed = 1.0;
    double speed_efficiency = 1.0;

    Point position_of(const Handle& handle) const;

    friend bool operator==(const LayoutFrame&, const LayoutFrame&) = default;
};

/// Seeded uniform positions in a square of half-width 10 * sqrt(n).
LayoutFrame init_layout(const WeightedAdjacency& view, std::uint64_t seed);

/**
 * Net ForceAtlas2 force on every node for the given frame:
 *   attraction along each undirected edge   w^delta * d
 *   repulsion between every pair            kr (deg_u + 1)(deg_v + 1) / d
 *   gravity toward the origin               kg (deg_u + 1)
 * Distances are clamped below at 1e-9. `view` must be symmetric.
 */
std::vector<Point> layout_forces(const WeightedAdjacency& view, const LayoutFrame& frame,
                                 const LayoutConfig& config, bool barnes_hut);

/// One synchronous step with the swinging/traction speed adaptation.
/// Directed views are symmetrized.
LayoutFrame fa2_step(const WeightedAdjacency& view, const LayoutFrame& frame, const LayoutConfig& config);

/// init_layout(config.seed) followed by config.iterations steps.
LayoutFrame run_layout(const WeightedAdjacency& view, const LayoutConfig& config);
/// Runs on undirected_view(graph).
LayoutFrame run_layout(const InteractionGraph& graph, const LayoutConfig& config);

} // namespace snsgraph
