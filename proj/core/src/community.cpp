#include "snsgraph/community.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "snsgraph/error.hpp"
#include "snsgraph/seed.hpp"

namespace snsgraph {

void LouvainConfig::validate() const {
    if (!(resolution > 0.0) || !std::isfinite(resolution))
        throw ConfigError("resolution must be positive, got " + std::to_string(resolution));
    if (!(min_gain > 0.0)) throw ConfigError("min_gain must be positive");
    if (max_passes == 0) throw ConfigError("max_passes must be at least 1");
}

double modularity(const WeightedAdjacency& view, std::span<const std::uint32_t> assignment,
                  double resolution) {
    if (assignment.size() != view.size())
        throw DataError("assignment covers " + std::to_string(assignment.size()) + " nodes, graph has " +
                        std::to_string(view.size()));
    const WeightedAdjacency sym = undirected_view(view);
    const double w = sym.total_weight();
    if (!(w > 0.0)) throw UndefinedModularityError("modularity is undefined for a graph with no edge weight");

    std::uint32_t max_id = 0;
    for (auto c : assignment) max_id = std::max(max_id, c);
    std::vector<double> internal(static_cast<std::size_t>(max_id) + 1, 0.0);
    std::vector<double> total(internal.size(), 0.0);

    for (std::uint32_t u = 0; u < sym.size(); ++u) {
        const auto cu = assignment[u];
        for (const auto& arc : sym.arcs(u)) {
            if (arc.target == u) {
                internal[cu] += arc.weight;
                total[cu] += 2.0 * arc.weight;
                continue;
            }
            total[cu] += arc.weight;
            // Each undirected edge is seen from both ends.
            if (arc.target > u && assignment[arc.target] == cu) internal[cu] += arc.weight;
        }
    }

    double q = 0.0;
    for (std::size_t c = 0; c < internal.size(); ++c) {
        const double share = total[c] / (2.0 * w);
        q += internal[c] / w - resolution * share * share;
    }
    return q;
}

CommunityGraph::CommunityGraph(const WeightedAdjacency& view) {
    const WeightedAdjacency sym = undirected_view(view);
    neighbors_.resize(sym.size());
    self_.assign(sym.size(), 0.0);
    for (std::uint32_t u = 0; u < sym.size(); ++u) {
        for (const auto& arc : sym.arcs(u)) {
            if (arc.target == u)
                self_[u] += arc.weight;
            else
                neighbors_[u].push_back(arc);
        }
    }
    finish();
}

void CommunityGraph::finish() {
    degree_.assign(neighbors_.size(), 0.0);
    double off_diagonal = 0.0;
    double loops = 0.0;
    for (std::size_t u = 0; u < neighbors_.size(); ++u) {
        double d = 2.0 * self_[u];
        for (const auto& arc : neighbors_[u]) d += arc.weight;
        degree_[u] = d;
        off_diagonal += d - 2.0 * self_[u];
        loops += self_[u];
    }
    total_weight_ = off_diagonal / 2.0 + loops;
}

CommunityGraph CommunityGraph::aggregate(std::span<const std::uint32_t> community, std::uint32_t count) const {
    struct Entry {
        std::uint32_t from;
        std::uint32_t to;
        double weight;
    };
    std::vector<Entry> entries;
    CommunityGraph out;
    out.self_.assign(count, 0.0);
    for (std::uint32_t u = 0; u < size(); ++u) {
        const auto cu = community[u];
        out.self_[cu] += self_[u];
        for (const auto& arc : neighbors_[u]) {
            const auto cv = community[arc.target];
            if (cu == cv) {
                if (arc.target > u) out.self_[cu] += arc.weight;
            } else {
                entries.push_back({cu, cv, arc.weight});
            }
        }
    }
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return a.from != b.from ? a.from < b.from : a.to < b.to;
    });
    out.neighbors_.resize(count);
    for (const auto& e : entries) {
        auto& row = out.neighbors_[e.from];
        if (!row.empty() && row.back().target == e.to)
            row.back().weight += e.weight;
        else
            row.push_back(Arc{e.to, e.weight});
    }
    out.finish();
    return out;
}

MoveContext::MoveContext(const CommunityGraph& graph, std::vector<std::uint32_t> assignment, double resolution)
    : graph_(&graph), assignment_(std::move(assignment)), resolution_(resolution) {
    if (assignment_.size() != graph.size()) throw DataError("assignment does not cover the graph");
    for (auto c : assignment_)
        if (c >= graph.size()) throw DataError("community id out of range");
    rebuild();
}

MoveContext::MoveContext(const CommunityGraph& graph, double resolution)
    : MoveContext(graph,
                  [&] {
                      std::vector<std::uint32_t> ids(graph.size());
                      std::iota(ids.begin(), ids.end(), 0u);
                      return ids;
                  }(),
                  resolution) {}

void MoveContext::rebuild() {
    const auto n = graph_->size();
    total_.assign(n, 0.0);
    internal_.assign(n, 0.0);
    for (std::uint32_t u = 0; u < n; ++u) {
        const auto cu = assignment_[u];
        total_[cu] += graph_->degree(u);
        internal_[cu] += graph_->self_loop(u);
        for (const auto& arc : graph_->neighbors(u))
            if (arc.target > u && assignment_[arc.target] == cu) internal_[cu] += arc.weight;
    }
}

double MoveContext::links(std::uint32_t node, std::uint32_t community) const {
    double sum = 0.0;
    for (const auto& arc : graph_->neighbors(node))
        if (assignment_[arc.target] == community) sum += arc.weight;
    return sum;
}

double MoveContext::gain(std::uint32_t node, std::uint32_t target) const {
    const auto own = assignment_[node];
    if (target == own) return 0.0;
    return gain(node, target, links(node, target), links(node, own));
}

double MoveContext::gain(std::uint32_t node, std::uint32_t target, double links_to_target,
                         double links_to_own) const {
    const auto own = assignment_[node];
    if (target == own) return 0.0;
    // Removing the node from `own` and adding it to `target` changes
    //   sum in_c / W           by (links_to_target - links_to_own) / W
    //   sum (tot_c / 2W)^2     by k (tot_target - tot_own + k) / (2 W^2)
    const double w = graph_->total_weight();
    const double k = graph_->degree(node);
    return (links_to_target - links_to_own) / w -
           resolution_ * k * (total_[target] - total_[own] + k) / (2.0 * w * w);
}

void MoveContext::move(std::uint32_t node, std::uint32_t target) {
    const auto own = assignment_[node];
    if (target == own) return;
    const double to_own = links(node, own);
    const double to_target = links(node, target);
    const double k = graph_->degree(node);
    const double loop = graph_->self_loop(node);
    total_[own] -= k;
    internal_[own] -= to_own + loop;
    total_[target] += k;
    internal_[target] += to_target + loop;
    assignment_[node] = target;
}

double MoveContext::modularity() const {
    const double w = graph_->total_weight();
    if (!(w > 0.0)) throw UndefinedModularityError("modularity is undefined for a graph with no edge weight");
    double q = 0.0;
    for (std::size_t c = 0; c < total_.size(); ++c) {
        const double share = total_[c] / (2.0 * w);
        q += internal_[c] / w - resolution_ * share * share;
    }
    return q;
}

namespace {

/// Q of the context recomputed from its assignment alone.
double recomputed_modularity(const MoveContext& ctx, double resolution) {
    return MoveContext(ctx.graph(), ctx.assignment(), resolution).modularity();
}

/// One run of phase 1 on `ctx`. Returns the number of accepted moves.
std::size_t move_nodes(MoveContext& ctx, const LouvainConfig& config, Rng& rng, LouvainTrace* trace) {
    const auto& graph = ctx.graph();
    const auto n = graph.size();
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);

    std::vector<double> link_weight(n, 0.0);
    std::vector<std::uint32_t> touched;
    std::size_t moves = 0;

    // Each sweep strictly increases Q, so the cap only guards against
    // pathological floating-point plateaus.
    constexpr std::size_t kMaxSweeps = 10000;
    for (std::size_t sweep = 0; sweep < kMaxSweeps; ++sweep) {
        rng.shuffle(order);
        double sweep_gain = 0.0;
        for (const auto node : order) {
            touched.clear();
            for (const auto& arc : graph.neighbors(node)) {
                const auto c = ctx.community_of(arc.target);
                if (link_weight[c] == 0.0) touched.push_back(c);
                link_weight[c] += arc.weight;
            }
            const auto own = ctx.community_of(node);
            const double to_own = link_weight[own];

            std::uint32_t best = own;
            double best_gain = 0.0;
            for (const auto c : touched) {
                if (c == own) continue;
                const double g = ctx.gain(node, c, link_weight[c], to_own);
                if (g > best_gain || (g == best_gain && g > 0.0 && c < best)) {
                    best_gain = g;
                    best = c;
                }
            }
            for (const auto c : touched) link_weight[c] = 0.0;

            if (best == own) continue;
            double before = 0.0;
            if (trace != nullptr && trace->verify_gains) before = recomputed_modularity(ctx, config.resolution);
            ctx.move(node, best);
            ++moves;
            sweep_gain += best_gain;
            if (trace != nullptr) {
                ++trace->accepted_moves;
                trace->min_accepted_gain = std::min(trace->min_accepted_gain, best_gain);
                if (trace->verify_gains) {
                    const double after = recomputed_modularity(ctx, config.resolution);
                    trace->max_gain_error = std::max(trace->max_gain_error, std::abs((after - before) - best_gain));
                }
            }
        }
        if (sweep_gain <= config.min_gain) break;
    }
    return moves;
}

} // namespace

Partition louvain(const WeightedAdjacency& view, const LouvainConfig& config, LouvainTrace* trace) {
    config.validate();
    const WeightedAdjacency sym = undirected_view(view);
    if (!(sym.total_weight() > 0.0))
        throw UndefinedModularityError("Louvain needs at least one edge; modularity is undefined");

    if (trace != nullptr) {
        trace->level_modularity.clear();
        trace->accepted_moves = 0;
        trace->min_accepted_gain = std::numeric_limits<double>::infinity();
        trace->max_gain_error = 0.0;
    }

    Rng rng(config.seed);
    CommunityGraph level(sym);
    std::vector<std::uint32_t> membership(sym.size());
    std::iota(membership.begin(), membership.end(), 0u);

    double level_q = MoveContext(level, config.resolution).modularity();
    if (trace != nullptr) trace->level_modularity.push_back(level_q);

    for (std::size_t pass = 0; pass < config.max_passes; ++pass) {
        MoveContext ctx(level, config.resolution);
        const auto moves = move_nodes(ctx, config, rng, trace);
        if (moves == 0) break;

        const double q = ctx.modularity();
        auto community = ctx.assignment();
        const auto count = densify(community);
        for (auto& m : membership) m = community[m];
        level = level.aggregate(community, count);

        if (trace != nullptr) trace->level_modularity.push_back(q);
        const bool improved = q - level_q > config.min_gain;
        level_q = q;
        if (!improved) break;
    }

    Partition out;
    out.nodes = sym.nodes();
    out.community = std::move(membership);
    out.community_count = densify(out.community);
    out.modularity_q = modularity(sym, out.community, config.resolution);
    return out;
}

Partition louvain(const InteractionGraph& graph, const LouvainConfig& config, LouvainTrace* trace) {
    return louvain(undirected_view(graph), config, trace);
}

} // namespace snsgraph
