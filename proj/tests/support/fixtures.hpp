#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "oracles.hpp"
#include "snsgraph/graph.hpp"
#include "snsgraph/ingest.hpp"

namespace snsgraph::testing {

struct WeightedEdge {
    std::uint32_t u;
    std::uint32_t v;
    double w;
};

/// Plain edge list with nodes named n00, n01, ... so index order matches
/// handle order.
struct EdgeList {
    std::uint32_t n = 0;
    std::vector<WeightedEdge> edges;

    std::vector<Handle> handles() const;
    /// Undirected: each edge {u, v} as two arcs (u == v gives one self-loop arc).
    WeightedAdjacency symmetric_view() const;
    /// Directed: each edge as the single arc u->v.
    WeightedAdjacency directed_view() const;
    /// Dense matrix built straight from the list.
    Matrix undirected_matrix() const;
    Matrix directed_matrix() const;
};

std::string node_name(std::uint32_t i);

/// Zachary karate club, 34 nodes, 78 unweighted edges.
EdgeList karate_club();

/// Best karate partition found by the networkx Louvain implementation over
/// seeds 0..49, and its modularity.
std::vector<std::vector<std::uint32_t>> karate_reference_partition();
inline constexpr double kKarateReferenceQ = 0.41978961209730437;

/// Erdos-Renyi style undirected graph with uniform weights in [lo, hi].
EdgeList random_undirected(std::mt19937_64& rng, std::uint32_t n, double p, double lo = 0.5, double hi = 5.0,
                           bool self_loops = false);
/// Random directed graph containing a Hamiltonian cycle, so strongly connected.
EdgeList random_strongly_connected(std::mt19937_64& rng, std::uint32_t n, double p, double lo = 0.5, double hi = 5.0);

/// Two triangles {0,1,2} and {3,4,5} joined by the bridge 2-3.
EdgeList two_triangles();

struct CorpusSpec {
    std::size_t records = 10'000;
    std::size_t users = 2'500;
    std::size_t communities = 25;
    double on_topic = 0.9;       ///< share of records tagged #GE2017
    double in_community = 0.85;  ///< mentions that stay inside the author's community
    std::uint64_t seed = 7;
};

/// Planted-community interaction corpus with replies, mentions, follows,
/// retweets, a Zipf-like vocabulary with sentiment words, and one volume
/// burst in the timestamps.
std::vector<InteractionRecord> synthetic_corpus(const CorpusSpec& spec);
std::string to_jsonl(const std::vector<InteractionRecord>& records);

/// Fresh directory under the system temp dir, removed on destruction.
class ScratchDir {
public:
    explicit ScratchDir(const std::string& name);
    ~ScratchDir();
    ScratchDir(const ScratchDir&) = delete;
    ScratchDir& operator=(const ScratchDir&) = delete;

    const std::filesystem::path& path() const noexcept { return path_; }
    std::string operator/(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

void write_file(const std::string& path, const std::string& text);
std::string read_file(const std::string& path);

} // namespace snsgraph::testing
