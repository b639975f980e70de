#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>

#include <fmt/format.h>

namespace snsgraph::testing {

std::string node_name(std::uint32_t i) { return fmt::format("n{:03}", i); }

std::vector<Handle> EdgeList::handles() const {
    std::vector<Handle> out;
    for (std::uint32_t i = 0; i < n; ++i) out.emplace_back(node_name(i));
    return out;
}

WeightedAdjacency EdgeList::symmetric_view() const {
    std::vector<std::vector<Arc>> out(n);
    for (const auto& e : edges) {
        out[e.u].push_back({e.v, e.w});
        if (e.u != e.v) out[e.v].push_back({e.u, e.w});
    }
    return WeightedAdjacency(handles(), std::move(out), true);
}

WeightedAdjacency EdgeList::directed_view() const {
    std::vector<std::vector<Arc>> out(n);
    for (const auto& e : edges) out[e.u].push_back({e.v, e.w});
    return WeightedAdjacency(handles(), std::move(out), false);
}

Matrix EdgeList::undirected_matrix() const {
    Matrix a(n, std::vector<double>(n, 0.0));
    for (const auto& e : edges) {
        if (e.u == e.v) {
            a[e.u][e.u] += 2.0 * e.w;
        } else {
            a[e.u][e.v] += e.w;
            a[e.v][e.u] += e.w;
        }
    }
    return a;
}

Matrix EdgeList::directed_matrix() const {
    Matrix a(n, std::vector<double>(n, 0.0));
    for (const auto& e : edges) a[e.u][e.v] += e.w;
    return a;
}

EdgeList karate_club() {
    static const std::vector<std::pair<int, int>> kEdges = {
        {0, 1},   {0, 2},   {0, 3},   {0, 4},   {0, 5},   {0, 6},   {0, 7},   {0, 8},   {0, 10},  {0, 11},
        {0, 12},  {0, 13},  {0, 17},  {0, 19},  {0, 21},  {0, 31},  {1, 2},   {1, 3},   {1, 7},   {1, 13},
        {1, 17},  {1, 19},  {1, 21},  {1, 30},  {2, 3},   {2, 7},   {2, 8},   {2, 9},   {2, 13},  {2, 27},
        {2, 28},  {2, 32},  {3, 7},   {3, 12},  {3, 13},  {4, 6},   {4, 10},  {5, 6},   {5, 10},  {5, 16},
        {6, 16},  {8, 30},  {8, 32},  {8, 33},  {9, 33},  {13, 33}, {14, 32}, {14, 33}, {15, 32}, {15, 33},
        {18, 32}, {18, 33}, {19, 33}, {20, 32}, {20, 33}, {22, 32}, {22, 33}, {23, 25}, {23, 27}, {23, 29},
        {23, 32}, {23, 33}, {24, 25}, {24, 27}, {24, 31}, {25, 31}, {26, 29}, {26, 33}, {27, 33}, {28, 31},
        {28, 33}, {29, 32}, {29, 33}, {30, 32}, {30, 33}, {31, 32}, {31, 33}, {32, 33}};
    EdgeList g;
    g.n = 34;
    for (auto [u, v] : kEdges) g.edges.push_back({static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v), 1.0});
    return g;
}

std::vector<std::vector<std::uint32_t>> karate_reference_partition() {
    return {{0, 1, 2, 3, 7, 11, 12, 13, 17, 19, 21},
            {4, 5, 6, 10, 16},
            {8, 9, 14, 15, 18, 20, 22, 26, 29, 30, 32, 33},
            {23, 24, 25, 27, 28, 31}};
}

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

} // namespace

EdgeList random_undirected(std::mt19937_64& rng, std::uint32_t n, double p, double lo, double hi, bool self_loops) {
    EdgeList g;
    g.n = n;
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = self_loops ? u : u + 1; v < n; ++v)
            if (uniform(rng, 0.0, 1.0) < (u == v ? p / 4.0 : p)) g.edges.push_back({u, v, uniform(rng, lo, hi)});
    if (g.edges.empty() && n >= 2) g.edges.push_back({0, 1, uniform(rng, lo, hi)});
    return g;
}

EdgeList random_strongly_connected(std::mt19937_64& rng, std::uint32_t n, double p, double lo, double hi) {
    EdgeList g;
    g.n = n;
    std::vector<std::uint32_t> order(n);
    for (std::uint32_t i = 0; i < n; ++i) order[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[pick(rng, i)]);
    std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
    for (std::uint32_t i = 0; i < n; ++i) {
        const auto u = order[i], v = order[(i + 1) % n];
        used[u][v] = true;
        g.edges.push_back({u, v, uniform(rng, lo, hi)});
    }
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = 0; v < n; ++v)
            if (u != v && !used[u][v] && uniform(rng, 0.0, 1.0) < p) g.edges.push_back({u, v, uniform(rng, lo, hi)});
    return g;
}

EdgeList two_triangles() {
    EdgeList g;
    g.n = 6;
    g.edges = {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {3, 4, 1}, {3, 5, 1}, {4, 5, 1}, {2, 3, 1}};
    return g;
}

std::vector<InteractionRecord> synthetic_corpus(const CorpusSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    static const std::vector<std::string> kPositive = {"good", "great", "hope", "win", "support", "strong"};
    static const std::vector<std::string> kNegative = {"bad", "chaos", "fail", "weak", "crisis", "lies"};
    std::vector<std::string> vocab;
    for (int i = 0; i < 400; ++i) vocab.push_back(fmt::format("word{}", i));

    auto zipf_word = [&]() -> const std::string& {
        // Inverse-power sampling gives a long tail over the vocabulary.
        const double u = uniform(rng, 0.0, 1.0);
        const auto idx = static_cast<std::size_t>(std::pow(u, 3.0) * static_cast<double>(vocab.size()));
        return vocab[std::min(idx, vocab.size() - 1)];
    };
    auto user = [&](std::size_t i) { return Handle(fmt::format("user{:05}", i)); };
    auto community_member = [&](std::size_t c) {
        const std::size_t per = spec.users / spec.communities;
        return user(c * per + pick(rng, per));
    };

    const Timestamp start = parse_rfc3339("2017-05-01T00:00:00Z");
    std::vector<InteractionRecord> out;
    out.reserve(spec.records);
    for (std::size_t i = 0; i < spec.records; ++i) {
        InteractionRecord r;
        r.id = fmt::format("t{:07}", i);
        const std::size_t c = pick(rng, spec.communities);
        r.author = community_member(c);

        auto partner = [&]() {
            const bool inside = uniform(rng, 0.0, 1.0) < spec.in_community;
            return community_member(inside ? c : pick(rng, spec.communities));
        };
        const int mentions = static_cast<int>(pick(rng, 3));
        for (int m = 0; m < mentions; ++m) {
            auto h = partner();
            if (h != r.author && std::find(r.mentions.begin(), r.mentions.end(), h) == r.mentions.end())
                r.mentions.push_back(h);
        }
        if (uniform(rng, 0.0, 1.0) < 0.3) r.in_reply_to = partner();
        if (uniform(rng, 0.0, 1.0) < 0.1) r.follows.push_back(partner());

        std::string text;
        if (uniform(rng, 0.0, 1.0) < 0.1) text = "RT " + partner().display() + " ";
        const int words = 4 + static_cast<int>(pick(rng, 8));
        for (int w = 0; w < words; ++w) {
            const double roll = uniform(rng, 0.0, 1.0);
            const std::string& word = roll < 0.06   ? kPositive[pick(rng, kPositive.size())]
                                      : roll < 0.11 ? kNegative[pick(rng, kNegative.size())]
                                                    : zipf_word();
            text += word + " ";
        }
        for (const auto& m : r.mentions) text += m.display() + " ";
        if (uniform(rng, 0.0, 1.0) < spec.on_topic) {
            r.hashtags.push_back("ge2017");
            text += "#GE2017";
        } else {
            r.hashtags.push_back("football");
            text += "#football";
        }
        r.text = text;

        // Three records a minute, with a tenfold burst around 40% of the way.
        const auto minute = static_cast<std::int64_t>(i / 3);
        const std::int64_t burst_start = static_cast<std::int64_t>(spec.records / 3 * 0.4);
        std::int64_t offset_s = minute * 60 + static_cast<std::int64_t>(pick(rng, 60));
        if (minute >= burst_start && minute < burst_start + 30) offset_s = burst_start * 60 + (minute - burst_start) * 6;
        r.timestamp = start + std::chrono::seconds{offset_s};
        out.push_back(std::move(r));
    }
    return out;
}

std::string to_jsonl(const std::vector<InteractionRecord>& records) {
    std::string out;
    for (const auto& r : records) {
        out += record_to_json(r);
        out += '\n';
    }
    return out;
}

ScratchDir::ScratchDir(const std::string& name)
    : path_(std::filesystem::temp_directory_path() / ("snsgraph-test-" + name)) {
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
}

ScratchDir::~ScratchDir() {
    std::error_code ignored;
    std::filesystem::remove_all(path_, ignored);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream(path, std::ios::binary) << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace snsgraph::testing
