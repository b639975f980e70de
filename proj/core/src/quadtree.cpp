#include "quadtree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace snsgraph::detail {

namespace {

constexpr int kMaxDepth = 48;
constexpr double kMinDistance = 1e-9;

} // namespace

QuadTree::QuadTree(std::span<const Point> positions, std::span<const double> masses)
    : pos_(positions), mass_(masses), order_(positions.size()), slot_(positions.size()) {
    std::iota(order_.begin(), order_.end(), 0u);
    regions_.reserve(2 * pos_.size() + 1);
    regions_.push_back(Region{0, static_cast<std::uint32_t>(pos_.size())});
    build(0, 0);
    for (std::uint32_t k = 0; k < order_.size(); ++k) slot_[order_[k]] = k;
}

void QuadTree::build(std::size_t region, int depth) {
    const auto begin = regions_[region].begin;
    const auto end = regions_[region].end;
    double m = 0.0, sx = 0.0, sy = 0.0;
    for (auto k = begin; k < end; ++k) {
        const auto b = order_[k];
        m += mass_[b];
        sx += mass_[b] * pos_[b].x;
        sy += mass_[b] * pos_[b].y;
    }
    const double cx = m > 0.0 ? sx / m : 0.0;
    const double cy = m > 0.0 ? sy / m : 0.0;
    double radius = 0.0;
    for (auto k = begin; k < end; ++k)
        radius = std::max(radius, std::hypot(pos_[order_[k]].x - cx, pos_[order_[k]].y - cy));
    {
        auto& r = regions_[region];
        r.mass = m;
        r.cx = cx;
        r.cy = cy;
        r.size = 2.0 * radius;
    }
    if (end - begin < 2 || radius == 0.0 || depth >= kMaxDepth) return;

    // Quadrants around the mass centre.
    auto first = order_.begin() + begin, last = order_.begin() + end;
    auto west = [&](std::uint32_t b) { return pos_[b].x < cx; };
    auto south = [&](std::uint32_t b) { return pos_[b].y < cy; };
    auto mid = std::partition(first, last, west);
    auto q1 = std::partition(first, mid, south);
    auto q3 = std::partition(mid, last, south);
    const std::uint32_t cuts[5] = {begin, static_cast<std::uint32_t>(q1 - order_.begin()),
                                   static_cast<std::uint32_t>(mid - order_.begin()),
                                   static_cast<std::uint32_t>(q3 - order_.begin()), end};

    const auto first_child = static_cast<std::uint32_t>(regions_.size());
    std::uint32_t count = 0;
    for (int q = 0; q < 4; ++q)
        if (cuts[q] < cuts[q + 1]) {
            regions_.push_back(Region{cuts[q], cuts[q + 1]});
            ++count;
        }
    regions_[region].first_child = first_child;
    regions_[region].child_count = count;
    for (std::uint32_t c = 0; c < count; ++c) build(first_child + c, depth + 1);
}

Point QuadTree::repulsion(std::uint32_t i, double kr, double theta) const {
    const Point p = pos_[i];
    const double mi = mass_[i];
    const auto slot = slot_[i];
    Point f;
    auto push_from = [&](double ox, double oy, double m) {
        const double dx = p.x - ox;
        const double dy = p.y - oy;
        const double d2 = std::max(dx * dx + dy * dy, kMinDistance * kMinDistance);
        const double factor = kr * mi * m / d2;
        f.x += dx * factor;
        f.y += dy * factor;
    };

    std::vector<std::uint32_t> stack{0};
    while (!stack.empty()) {
        const auto& r = regions_[stack.back()];
        stack.pop_back();
        if (r.child_count == 0) {
            for (auto k = r.begin; k < r.end; ++k)
                if (order_[k] != i) push_from(pos_[order_[k]].x, pos_[order_[k]].y, mass_[order_[k]]);
            continue;
        }
        const bool contains_i = slot >= r.begin && slot < r.end;
        const double d = std::max(std::hypot(p.x - r.cx, p.y - r.cy), kMinDistance);
        if (!contains_i && r.size / d < theta) {
            push_from(r.cx, r.cy, r.mass);
        } else {
            for (std::uint32_t c = 0; c < r.child_count; ++c) stack.push_back(r.first_child + c);
        }
    }
    return f;
}

} // namespace snsgraph::detail
