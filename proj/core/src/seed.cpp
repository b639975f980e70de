#include "snsgraph/seed.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>
#include <string>
#include <utility>

#include "snsgraph/error.hpp"

namespace snsgraph {

std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t global_seed, std::string_view module) {
    return splitmix64(global_seed ^ fnv1a64(module));
}

std::optional<std::uint64_t> seed_from_environment() {
    const char* raw = std::getenv("SNSGRAPH_SEED");
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    std::string_view text(raw);
    std::uint64_t value = 0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || p != text.data() + text.size())
        throw ConfigError("SNSGRAPH_SEED must be an unsigned integer, got '" + std::string(text) + "'");
    return value;
}

std::uint64_t Rng::below(std::uint64_t bound) {
    // Rejection sampling removes modulo bias.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = 0;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

} // namespace snsgraph
