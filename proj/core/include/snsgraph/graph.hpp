#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "snsgraph/handle.hpp"

namespace snsgraph {

enum class InteractionKind : std::uint8_t { Reply, Mention, Follow };

inline constexpr std::array<InteractionKind, 3> kInteractionKinds = {
    InteractionKind::Reply, InteractionKind::Mention, InteractionKind::Follow};

std::string_view to_string(InteractionKind kind);
/// Accepts "reply", "mention", "follow" in any case. Throws ParseError otherwise.
InteractionKind parse_interaction_kind(std::string_view text);

struct EdgeKey {
    Handle source;
    Handle target;
    InteractionKind kind;

    friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
    friend bool operator==(const EdgeKey&, const EdgeKey&) = default;
};

/**
 * Directed multigraph of account interactions. One weighted edge per
 * (source, target, kind) triple; weights are positive interaction counts.
 *
 * Nodes iterate in handle order, so every derived view is independent of the
 * order in which interactions were added. Self-loops are never stored.
 */
class InteractionGraph {
public:
    /// Returns true when the node was not present before.
    bool add_node(const Handle& handle);

    /// Adds `weight` interactions. Endpoints are inserted as needed. Returns
    /// false without touching the graph when source == target.
    /// Throws DataError for weight == 0.
    bool add_edge(const Handle& source, const Handle& target, InteractionKind kind,
                  std::uint64_t weight = 1);

    /// Removes the node and every incident edge. Returns false when absent.
    bool remove_node(const Handle& handle);

    bool contains(const Handle& handle) const { return nodes_.contains(handle); }
    std::uint64_t weight(const Handle& source, const Handle& target, InteractionKind kind) const;

    std::size_t node_count() const noexcept { return nodes_.size(); }
    /// Number of distinct (source, target, kind) edges.
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::uint64_t total_weight() const noexcept { return total_weight_; }

    const std::set<Handle>& nodes() const noexcept { return nodes_; }
    const std::map<EdgeKey, std::uint64_t>& edges() const noexcept { return edges_; }

    friend bool operator==(const InteractionGraph&, const InteractionGraph&) = default;

private:
    std::set<Handle> nodes_;
    std::map<EdgeKey, std::uint64_t> edges_;
    std::uint64_t total_weight_ = 0;
};

struct Arc {
    std::uint32_t target;
    double weight;

    friend bool operator==(const Arc&, const Arc&) = default;
};

/**
 * Index-based weighted adjacency over a sorted node list. Arcs of each node
 * are sorted by target index.
 *
 * A symmetric view stores every undirected edge {u, v} as the two arcs u->v
 * and v->u carrying the same weight; a self-loop is a single arc u->u.
 */
class WeightedAdjacency {
public:
    WeightedAdjacency() = default;
    /// Sorts and merges duplicate arcs. Throws DataError on out-of-range
    /// targets, non-positive weights or an asymmetric "symmetric" input.
    WeightedAdjacency(std::vector<Handle> nodes, std::vector<std::vector<Arc>> out, bool symmetric);

    std::size_t size() const noexcept { return nodes_.size(); }
    bool empty() const noexcept { return nodes_.empty(); }
    bool symmetric() const noexcept { return symmetric_; }

    const std::vector<Handle>& nodes() const noexcept { return nodes_; }
    std::span<const Arc> arcs(std::uint32_t u) const { return out_[u]; }
    std::optional<std::uint32_t> index_of(const Handle& handle) const;

    /// Weight of the arc u->v, 0 when absent.
    double weight(std::uint32_t u, std::uint32_t v) const;
    /// Sum of arc weights; symmetric views count each undirected edge once.
    double total_weight() const noexcept { return total_weight_; }
    /// Out-strength; in a symmetric view a self-loop counts twice.
    double degree(std::uint32_t u) const;
    std::size_t arc_count() const noexcept;

    friend bool operator==(const WeightedAdjacency&, const WeightedAdjacency&) = default;

private:
    std::vector<Handle> nodes_;
    std::vector<std::vector<Arc>> out_;
    bool symmetric_ = false;
    double total_weight_ = 0.0;
};

/// weight(u,v) = weight(v,u) = sum over kinds of w(u->v) + w(v->u).
WeightedAdjacency undirected_view(const InteractionGraph& graph);
/// Symmetrizes a directed view; returns a symmetric view unchanged.
WeightedAdjacency undirected_view(const WeightedAdjacency& view);
/// weight(u->v) = sum over kinds of w(u->v).
WeightedAdjacency merge_kinds(const InteractionGraph& graph);

} // namespace snsgraph
