#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "snsgraph/graph.hpp"
#include "snsgraph/model.hpp"

namespace snsgraph {

struct LouvainConfig {
    double resolution = 1.0;
    std::uint64_t seed = 0;
    /// A sweep or level that improves Q by no more than this ends the run.
    double min_gain = 1e-9;
    std::size_t max_passes = 100;

    /// Throws ConfigError.
    void validate() const;
};

/**
 * Weighted Newman modularity with a resolution parameter,
 *
 *   Q = sum_c [ in_c / W - resolution * (tot_c / 2W)^2 ]
 *
 * where W is the total undirected weight, in_c the weight of edges inside c
 * (each edge once, self-loops included) and tot_c the summed degree of c.
 * A directed view is symmetrized first. `assignment[i]` is the community of
 * view.nodes()[i]; ids need not be dense.
 *
 * Throws UndefinedModularityError when W == 0 and DataError when the
 * assignment size does not match the view.
 */
double modularity(const WeightedAdjacency& view, std::span<const std::uint32_t> assignment,
                  double resolution = 1.0);

/// Undirected working graph for the Louvain levels; self-loops kept apart
/// from neighbour arcs.
class CommunityGraph {
public:
    /// Symmetrizes `view` when needed.
    explicit CommunityGraph(const WeightedAdjacency& view);

    std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(neighbors_.size()); }
    /// Arcs to other nodes, sorted by target.
    std::span<const Arc> neighbors(std::uint32_t u) const { return neighbors_[u]; }
    double self_loop(std::uint32_t u) const { return self_[u]; }
    /// Weighted degree, self-loop counted twice.
    double degree(std::uint32_t u) const { return degree_[u]; }
    double total_weight() const noexcept { return total_weight_; }

    /// Collapses each community into one node. Intra-community weight becomes
    /// the new node's self-loop. `community` must be dense in [0, count).
    CommunityGraph aggregate(std::span<const std::uint32_t> community, std::uint32_t count) const;

private:
    CommunityGraph() = default;
    void finish();

    std::vector<std::vector<Arc>> neighbors_;
    std::vector<double> self_;
    std::vector<double> degree_;
    double total_weight_ = 0.0;
};

/**
 * Incremental bookkeeping for local node moves: per-community degree sums
 * and internal weights, so the modularity change of a move is available
 * without recomputing Q.
 */
class MoveContext {
public:
    /// `assignment` ids must lie in [0, graph.size()).
    MoveContext(const CommunityGraph& graph, std::vector<std::uint32_t> assignment, double resolution);
    /// Singleton start.
    MoveContext(const CommunityGraph& graph, double resolution);

    /// Q(after moving `node` into `target`) - Q(now). Zero when `target` is
    /// the node's current community.
    double gain(std::uint32_t node, std::uint32_t target) const;

    /// Same as gain() with the link weights already known: `links_to_target`
    /// and `links_to_own` are the weights from `node` to the other members of
    /// the target and of its own community.
    double gain(std::uint32_t node, std::uint32_t target, double links_to_target, double links_to_own) const;

    /// Weight from `node` to the members of `community`, excluding its self-loop.
    double links(std::uint32_t node, std::uint32_t community) const;

    void move(std::uint32_t node, std::uint32_t target);

    std::uint32_t community_of(std::uint32_t node) const { return assignment_[node]; }
    const std::vector<std::uint32_t>& assignment() const noexcept { return assignment_; }
    double community_degree(std::uint32_t community) const { return total_[community]; }
    const CommunityGraph& graph() const noexcept { return *graph_; }

    /// Q of the current assignment from the cached sums.
    double modularity() const;

private:
    void rebuild();

    const CommunityGraph* graph_;
    std::vector<std::uint32_t> assignment_;
    std::vector<double> total_;
    std::vector<double> internal_;
    double resolution_;
};

/// Optional diagnostics of a Louvain run.
struct LouvainTrace {
    /// Q after each completed level, starting with the singleton partition.
    std::vector<double> level_modularity;
    std::size_t accepted_moves = 0;
    /// Smallest gain among accepted moves; +inf when nothing moved.
    double min_accepted_gain = 0.0;
    /// Largest |incremental gain - global recomputation| seen. Only filled
    /// when `verify_gains` is set (quadratic cost, for tests).
    double max_gain_error = 0.0;
    bool verify_gains = false;
};

/**
 * Louvain method: phase 1 moves nodes, in a seeded random order re-shuffled
 * every sweep, to the neighbouring community of largest positive modularity
 * gain (ties to the lowest id) until a sweep gains no more than min_gain;
 * phase 2 aggregates communities into super-nodes. Levels repeat until one
 * brings no improvement above min_gain or max_passes levels ran.
 *
 * The returned modularity_q is recomputed from scratch on the input view.
 * Throws UndefinedModularityError for an edgeless graph.
 */
Partition louvain(const WeightedAdjacency& view, const LouvainConfig& config, LouvainTrace* trace = nullptr);
/// Runs on undirected_view(graph).
Partition louvain(const InteractionGraph& graph, const LouvainConfig& config, LouvainTrace* trace = nullptr);

} // namespace snsgraph
