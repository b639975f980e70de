#include "snsgraph/centrality.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <string>

#include "snsgraph/error.hpp"

namespace snsgraph {

std::string_view to_string(CentralityMode mode) {
    return mode == CentralityMode::Incoming ? "incoming" : "undirected";
}

CentralityMode parse_centrality_mode(std::string_view text) {
    std::string lower(text);
    for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower == "incoming") return CentralityMode::Incoming;
    if (lower == "undirected") return CentralityMode::Undirected;
    throw ConfigError("centrality mode must be incoming or undirected, got '" + std::string(text) + "'");
}

void PowerIterationConfig::validate() const {
    if (max_iters == 0) throw ConfigError("max_iters must be at least 1");
    if (!(tolerance > 0.0)) throw ConfigError("tolerance must be positive");
    if (!(teleport >= 0.0 && teleport < 1.0)) throw ConfigError("teleport must lie in [0, 1)");
}

namespace {

// y = A^T x where A[u][v] is the weight of arc u->v.
void propagate(const WeightedAdjacency& adj, const std::vector<double>& x, std::vector<double>& y) {
    std::fill(y.begin(), y.end(), 0.0);
    for (std::uint32_t u = 0; u < adj.size(); ++u) {
        const double xu = x[u];
        for (const auto& arc : adj.arcs(u)) y[arc.target] += arc.weight * xu;
    }
}

double l1(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

} // namespace

CentralityResult eigenvector_centrality(const WeightedAdjacency& view, const PowerIterationConfig& config) {
    config.validate();
    if (view.empty()) throw DataError("eigenvector centrality of an empty graph");

    const WeightedAdjacency adj = config.mode == CentralityMode::Undirected ? undirected_view(view) : view;
    const std::size_t n = adj.size();

    std::vector<double> x(n, 1.0 / static_cast<double>(n));
    std::vector<double> y(n, 0.0);

    propagate(adj, x, y);
    if (l1(y) == 0.0)
        throw DegenerateSpectrumError(std::string("all-zero iterate: the graph has no edges in ") +
                                      std::string(to_string(config.mode)) + " mode");

    CentralityResult result;
    const double uniform = 1.0 / static_cast<double>(n);
    for (std::size_t iter = 1; iter <= config.max_iters; ++iter) {
        propagate(adj, x, y);
        for (std::size_t i = 0; i < n; ++i) y[i] += x[i];
        const double norm = l1(y);
        double change = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double next = y[i] / norm;
            if (config.teleport > 0.0) next = (1.0 - config.teleport) * next + config.teleport * uniform;
            change = std::max(change, std::abs(next - x[i]));
            x[i] = next;
        }
        result.iterations = iter;
        if (change <= config.tolerance) {
            result.converged = true;
            break;
        }
    }

    propagate(adj, x, y);
    result.eigenvalue = l1(y) / l1(x);

    double scale = 0.0;
    if (config.normalization == Normalization::L1)
        scale = l1(x);
    else
        scale = *std::max_element(x.begin(), x.end());
    for (auto& v : x) v /= scale;

    result.vector.nodes = adj.nodes();
    result.vector.scores = std::move(x);
    result.vector.normalization = config.normalization;
    return result;
}

CentralityResult eigenvector_centrality(const InteractionGraph& graph, const PowerIterationConfig& config) {
    if (graph.node_count() == 0) throw DataError("eigenvector centrality of an empty graph");
    return eigenvector_centrality(merge_kinds(graph), config);
}

std::vector<std::pair<Handle, double>> top_k(const CentralityVector& vector, std::size_t k) {
    if (k == 0) throw ConfigError("top_k needs k >= 1");
    std::vector<std::size_t> idx(vector.nodes.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    const auto take = std::min(k, idx.size());
    std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(take), idx.end(),
                      [&](std::size_t a, std::size_t b) {
                          if (vector.scores[a] != vector.scores[b]) return vector.scores[a] > vector.scores[b];
                          return vector.nodes[a] < vector.nodes[b];
                      });
    std::vector<std::pair<Handle, double>> out;
    out.reserve(take);
    for (std::size_t i = 0; i < take; ++i) out.emplace_back(vector.nodes[idx[i]], vector.scores[idx[i]]);
    return out;
}

} // namespace snsgraph
