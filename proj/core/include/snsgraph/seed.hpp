#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

namespace snsgraph {

/// Per-module seed: splitmix64(global ^ fnv1a64(module)). Every pipeline stage
/// derives its own seed this way so the whole run is fixed by one number.
std::uint64_t derive_seed(std::uint64_t global_seed, std::string_view module);

std::uint64_t fnv1a64(std::string_view text);
std::uint64_t splitmix64(std::uint64_t x);

/// Reads SNSGRAPH_SEED. Returns nullopt when unset; throws ConfigError when
/// the value is not an unsigned integer.
std::optional<std::uint64_t> seed_from_environment();

/// mt19937_64 with portable helpers. The standard distributions are
/// implementation-defined, so sampling is done by hand to keep runs
/// reproducible across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform in [0, bound). bound must be > 0.
    std::uint64_t below(std::uint64_t bound);

    template <typename Container>
    void shuffle(Container& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            auto j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace snsgraph
