#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "snsgraph/graph.hpp"
#include "snsgraph/model.hpp"

namespace snsgraph {

enum class CentralityMode : std::uint8_t {
    Incoming,   ///< v scores from the edges u->v pointing at it
    Undirected, ///< symmetrized adjacency
};

std::string_view to_string(CentralityMode mode);
CentralityMode parse_centrality_mode(std::string_view text);

struct PowerIterationConfig {
    CentralityMode mode = CentralityMode::Incoming;
    std::size_t max_iters = 1000;
    /// Stop once the L-infinity change of the L1-normalized iterate is at most this.
    double tolerance = 1e-10;
    Normalization normalization = Normalization::L1;
    /// Uniform teleport mass mixed into every iterate, in [0, 1). Zero keeps
    /// plain eigenvector centrality.
    double teleport = 0.0;

    void validate() const;
};

struct CentralityResult {
    CentralityVector vector;
    bool converged = false;
    std::size_t iterations = 0;
    /// Rayleigh-style estimate |A x|_1 / |x|_1 of the dominant eigenvalue.
    double eigenvalue = 0.0;
};

/**
 * Dominant eigenvector of the weighted adjacency by power iteration from a
 * uniform start.
 *
 * The iteration runs on A + I: same eigenvectors, but the dominant eigenvalue
 * becomes strictly largest in modulus, so bipartite graphs (paths, stars)
 * converge instead of oscillating.
 *
 * Throws DataError for an empty graph and DegenerateSpectrumError when the
 * selected mode has no edges to propagate along.
 */
CentralityResult eigenvector_centrality(const WeightedAdjacency& view, const PowerIterationConfig& config);
/// Runs on merge_kinds(graph).
CentralityResult eigenvector_centrality(const InteractionGraph& graph, const PowerIterationConfig& config);

/// Descending by score, ties by handle. Length min(k, n); k == 0 is a ConfigError.
std::vector<std::pair<Handle, double>> top_k(const CentralityVector& vector, std::size_t k);

} // namespace snsgraph
