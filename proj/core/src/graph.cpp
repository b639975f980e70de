#include "snsgraph/graph.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "snsgraph/error.hpp"

namespace snsgraph {

std::string_view to_string(InteractionKind kind) {
    switch (kind) {
    case InteractionKind::Reply: return "reply";
    case InteractionKind::Mention: return "mention";
    case InteractionKind::Follow: return "follow";
    }
    return "mention";
}

InteractionKind parse_interaction_kind(std::string_view text) {
    std::string lower(text);
    for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    for (auto kind : kInteractionKinds)
        if (to_string(kind) == lower) return kind;
    throw ParseError("unknown interaction kind '" + std::string(text) + "'");
}

bool InteractionGraph::add_node(const Handle& handle) { return nodes_.insert(handle).second; }

bool InteractionGraph::add_edge(const Handle& source, const Handle& target, InteractionKind kind,
                                std::uint64_t weight) {
    if (weight == 0) throw DataError("edge weight must be a positive count");
    if (source == target) return false;
    nodes_.insert(source);
    nodes_.insert(target);
    edges_[EdgeKey{source, target, kind}] += weight;
    total_weight_ += weight;
    return true;
}

bool InteractionGraph::remove_node(const Handle& handle) {
    if (nodes_.erase(handle) == 0) return false;
    for (auto it = edges_.begin(); it != edges_.end();) {
        if (it->first.source == handle || it->first.target == handle) {
            total_weight_ -= it->second;
            it = edges_.erase(it);
        } else {
            ++it;
        }
    }
    return true;
}

std::uint64_t InteractionGraph::weight(const Handle& source, const Handle& target,
                                       InteractionKind kind) const {
    auto it = edges_.find(EdgeKey{source, target, kind});
    return it == edges_.end() ? 0 : it->second;
}

WeightedAdjacency::WeightedAdjacency(std::vector<Handle> nodes, std::vector<std::vector<Arc>> out,
                                     bool symmetric)
    : nodes_(std::move(nodes)), out_(std::move(out)), symmetric_(symmetric) {
    if (out_.size() != nodes_.size()) throw DataError("adjacency rows do not match node count");
    if (!std::is_sorted(nodes_.begin(), nodes_.end()) ||
        std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end())
        throw DataError("adjacency nodes must be sorted and unique");

    const auto n = static_cast<std::uint32_t>(nodes_.size());
    for (auto& row : out_) {
        for (const auto& arc : row) {
            if (arc.target >= n) throw DataError("arc target out of range");
            if (!(arc.weight > 0.0)) throw DataError("arc weight must be positive");
        }
        std::sort(row.begin(), row.end(),
                  [](const Arc& a, const Arc& b) { return a.target < b.target; });
        std::vector<Arc> merged;
        merged.reserve(row.size());
        for (const auto& arc : row) {
            if (!merged.empty() && merged.back().target == arc.target)
                merged.back().weight += arc.weight;
            else
                merged.push_back(arc);
        }
        row = std::move(merged);
    }

    double sum = 0.0;
    double self = 0.0;
    for (std::uint32_t u = 0; u < n; ++u) {
        for (const auto& arc : out_[u]) {
            if (arc.target == u)
                self += arc.weight;
            else
                sum += arc.weight;
            if (symmetric_ && arc.target != u && weight(arc.target, u) != arc.weight)
                throw DataError("symmetric adjacency has mismatched reverse arc");
        }
    }
    total_weight_ = symmetric_ ? sum / 2.0 + self : sum + self;
}

std::optional<std::uint32_t> WeightedAdjacency::index_of(const Handle& handle) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), handle);
    if (it == nodes_.end() || *it != handle) return std::nullopt;
    return static_cast<std::uint32_t>(it - nodes_.begin());
}

double WeightedAdjacency::weight(std::uint32_t u, std::uint32_t v) const {
    const auto& row = out_[u];
    auto it = std::lower_bound(row.begin(), row.end(), v,
                               [](const Arc& a, std::uint32_t t) { return a.target < t; });
    return (it != row.end() && it->target == v) ? it->weight : 0.0;
}

double WeightedAdjacency::degree(std::uint32_t u) const {
    double d = 0.0;
    for (const auto& arc : out_[u]) d += (symmetric_ && arc.target == u) ? 2.0 * arc.weight : arc.weight;
    return d;
}

std::size_t WeightedAdjacency::arc_count() const noexcept {
    std::size_t total = 0;
    for (const auto& row : out_) total += row.size();
    return total;
}

namespace {

std::vector<Handle> sorted_nodes(const InteractionGraph& graph) {
    return {graph.nodes().begin(), graph.nodes().end()};
}

std::uint32_t index_in(const std::vector<Handle>& nodes, const Handle& h) {
    return static_cast<std::uint32_t>(std::lower_bound(nodes.begin(), nodes.end(), h) - nodes.begin());
}

} // namespace

WeightedAdjacency merge_kinds(const InteractionGraph& graph) {
    auto nodes = sorted_nodes(graph);
    std::vector<std::vector<Arc>> out(nodes.size());
    for (const auto& [key, w] : graph.edges()) {
        out[index_in(nodes, key.source)].push_back(
            Arc{index_in(nodes, key.target), static_cast<double>(w)});
    }
    return WeightedAdjacency(std::move(nodes), std::move(out), false);
}

WeightedAdjacency undirected_view(const InteractionGraph& graph) {
    return undirected_view(merge_kinds(graph));
}

WeightedAdjacency undirected_view(const WeightedAdjacency& view) {
    if (view.symmetric()) return view;
    std::vector<std::vector<Arc>> out(view.size());
    for (std::uint32_t u = 0; u < view.size(); ++u) {
        for (const auto& arc : view.arcs(u)) {
            out[u].push_back(arc);
            if (arc.target != u) out[arc.target].push_back(Arc{u, arc.weight});
        }
    }
    return WeightedAdjacency(view.nodes(), std::move(out), true);
}

} // namespace snsgraph
