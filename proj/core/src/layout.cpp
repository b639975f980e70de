#include "snsgraph/layout.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "quadtree.hpp"
#include "snsgraph/error.hpp"
#include "snsgraph/seed.hpp"

namespace snsgraph {

namespace {

constexpr double kMinDistance = 1e-9;

std::vector<double> node_masses(const WeightedAdjacency& view) {
    std::vector<double> mass(view.size());
    for (std::uint32_t u = 0; u < view.size(); ++u) {
        std::size_t degree = 0;
        for (const auto& arc : view.arcs(u))
            if (arc.target != u) ++degree;
        mass[u] = static_cast<double>(degree) + 1.0;
    }
    return mass;
}

double norm(Point p) { return std::hypot(p.x, p.y); }

LayoutFrame step(const WeightedAdjacency& sym, const std::vector<double>& mass, const LayoutFrame& frame,
                 const LayoutConfig& config) {
    const std::size_t n = sym.size();
    LayoutFrame next = frame;
    next.iteration = frame.iteration + 1;
    if (n == 0) return next;

    const auto forces = layout_forces(sym, frame, config, config.use_barnes_hut(n));

    double swinging_total = 0.0;
    double traction_total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& f = forces[i];
        const auto& prev = frame.previous_forces[i];
        swinging_total += mass[i] * norm({prev.x - f.x, prev.y - f.y});
        traction_total += mass[i] * 0.5 * norm({prev.x + f.x, prev.y + f.y});
    }

    // Jitter tolerance and speed efficiency follow the reference
    // ForceAtlas2 adaptation.
    const double nd = static_cast<double>(n);
    const double estimated_jt = 0.05 * std::sqrt(nd);
    const double min_jt = std::sqrt(estimated_jt);
    const double max_jt = 10.0;
    double jt = config.jitter_tolerance *
                std::max(min_jt, std::min(max_jt, estimated_jt * traction_total / (nd * nd)));

    constexpr double kMinSpeedEfficiency = 0.05;
    double efficiency = frame.speed_efficiency;
    if (traction_total > 0.0 && swinging_total / traction_total > 2.0) {
        if (efficiency > kMinSpeedEfficiency) efficiency *= 0.5;
        jt = std::max(jt, config.jitter_tolerance);
    }

    double speed = frame.global_speed;
    if (swinging_total > 0.0) {
        const double target = jt * efficiency * traction_total / swinging_total;
        if (swinging_total > jt * traction_total) {
            if (efficiency > kMinSpeedEfficiency) efficiency *= 0.7;
        } else if (speed < 1000.0) {
            efficiency *= 1.3;
        }
        // Rise is limited to 1.5x per step, well under the 10x cap.
        constexpr double kMaxRise = 0.5;
        speed = speed + std::min(target - speed, kMaxRise * speed);
    }

    for (std::size_t i = 0; i < n; ++i) {
        const auto& f = forces[i];
        const auto& prev = frame.previous_forces[i];
        const double swinging = mass[i] * norm({prev.x - f.x, prev.y - f.y});
        const double factor = speed / (1.0 + std::sqrt(speed * swinging));
        next.positions[i].x += f.x * factor;
        next.positions[i].y += f.y * factor;
    }
    next.previous_forces = forces;
    next.global_speed = speed;
    next.speed_efficiency = efficiency;
    return next;
}

void check_frame(const WeightedAdjacency& view, const LayoutFrame& frame) {
    if (frame.positions.size() != view.size() || frame.previous_forces.size() != view.size())
        throw DataError("layout frame does not cover every graph node");
}

} // namespace

std::string_view to_string(BarnesHutMode mode) {
    switch (mode) {
    case BarnesHutMode::Auto: return "auto";
    case BarnesHutMode::On: return "on";
    case BarnesHutMode::Off: return "off";
    }
    return "auto";
}

BarnesHutMode parse_barnes_hut_mode(std::string_view text) {
    if (text == "auto") return BarnesHutMode::Auto;
    if (text == "on") return BarnesHutMode::On;
    if (text == "off") return BarnesHutMode::Off;
    throw ConfigError("barnes-hut mode must be on, off or auto, got '" + std::string(text) + "'");
}

void LayoutConfig::validate() const {
    if (!(scaling > 0.0)) throw ConfigError("scaling must be positive");
    if (!(gravity >= 0.0)) throw ConfigError("gravity must be non-negative");
    if (!(edge_weight_influence >= 0.0)) throw ConfigError("edge weight influence must be non-negative");
    if (!(theta > 0.0)) throw ConfigError("theta must be positive");
    if (!(jitter_tolerance > 0.0)) throw ConfigError("jitter tolerance must be positive");
}

bool LayoutConfig::use_barnes_hut(std::size_t node_count) const {
    switch (barnes_hut) {
    case BarnesHutMode::On: return true;
    case BarnesHutMode::Off: return false;
    case BarnesHutMode::Auto: return node_count > kBarnesHutAutoThreshold;
    }
    return false;
}

Point LayoutFrame::position_of(const Handle& handle) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), handle);
    if (it == nodes.end() || *it != handle) throw DataError("no position for " + handle.display());
    return positions[static_cast<std::size_t>(it - nodes.begin())];
}

LayoutFrame init_layout(const WeightedAdjacency& view, std::uint64_t seed) {
    LayoutFrame frame;
    frame.nodes = view.nodes();
    const double half = 10.0 * std::sqrt(std::max<double>(1.0, static_cast<double>(view.size())));
    Rng rng(seed);
    frame.positions.reserve(view.size());
    for (std::size_t i = 0; i < view.size(); ++i) {
        const double x = rng.uniform(-half, half);
        const double y = rng.uniform(-half, half);
        frame.positions.push_back({x, y});
    }
    frame.previous_forces.assign(view.size(), Point{});
    return frame;
}

std::vector<Point> layout_forces(const WeightedAdjacency& view, const LayoutFrame& frame,
                                 const LayoutConfig& config, bool barnes_hut) {
    if (!view.symmetric()) throw DataError("layout forces need a symmetric view");
    check_frame(view, frame);
    const std::size_t n = view.size();
    const auto mass = node_masses(view);
    const auto& pos = frame.positions;
    std::vector<Point> force(n);

    if (barnes_hut) {
        detail::QuadTree tree(pos, mass);
        for (std::uint32_t i = 0; i < n; ++i) force[i] = tree.repulsion(i, config.scaling, config.theta);
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const double dx = pos[i].x - pos[j].x;
                const double dy = pos[i].y - pos[j].y;
                const double d2 = std::max(dx * dx + dy * dy, kMinDistance * kMinDistance);
                const double factor = config.scaling * mass[i] * mass[j] / d2;
                force[i].x += dx * factor;
                force[i].y += dy * factor;
                force[j].x -= dx * factor;
                force[j].y -= dy * factor;
            }
        }
    }

    if (config.gravity > 0.0) {
        for (std::size_t i = 0; i < n; ++i) {
            const double d = std::max(norm(pos[i]), kMinDistance);
            const double factor = config.gravity * mass[i] / d;
            force[i].x -= pos[i].x * factor;
            force[i].y -= pos[i].y * factor;
        }
    }

    for (std::uint32_t u = 0; u < n; ++u) {
        for (const auto& arc : view.arcs(u)) {
            if (arc.target <= u) continue;
            const auto v = arc.target;
            const double w = config.edge_weight_influence == 1.0 ? arc.weight
                             : config.edge_weight_influence == 0.0
                                 ? 1.0
                                 : std::pow(arc.weight, config.edge_weight_influence);
            const double dx = pos[u].x - pos[v].x;
            const double dy = pos[u].y - pos[v].y;
            force[u].x -= dx * w;
            force[u].y -= dy * w;
            force[v].x += dx * w;
            force[v].y += dy * w;
        }
    }
    return force;
}

LayoutFrame fa2_step(const WeightedAdjacency& view, const LayoutFrame& frame, const LayoutConfig& config) {
    config.validate();
    const WeightedAdjacency sym = undirected_view(view);
    check_frame(sym, frame);
    return step(sym, node_masses(sym), frame, config);
}

LayoutFrame run_layout(const WeightedAdjacency& view, const LayoutConfig& config) {
    config.validate();
    const WeightedAdjacency sym = undirected_view(view);
    const auto mass = node_masses(sym);
    LayoutFrame frame = init_layout(sym, config.seed);
    for (std::size_t i = 0; i < config.iterations; ++i) frame = step(sym, mass, frame, config);
    return frame;
}

LayoutFrame run_layout(const InteractionGraph& graph, const LayoutConfig& config) {
    return run_layout(undirected_view(graph), config);
}

} // namespace snsgraph
