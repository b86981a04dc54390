#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace parlor {

// Counter-free splitmix64 generator. One u64 of state, trivially copyable,
// so it can live inside a game state snapshot and replay bit-exactly.
class SplitMix64 {
public:
    SplitMix64() = default;
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) with 53 bits of entropy.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) {
        // Rejection-free Lemire reduction is overkill here; modulo bias at
        // n <= a few thousand is ~1e-16 and irrelevant for game dice.
        return next_u64() % n;
    }

    // Categorical draw by inverse CDF over weights (assumed to sum to ~1).
    std::size_t next_categorical(std::span<const double> weights) {
        double u = next_double();
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
            acc += weights[i];
            if (u < acc) return i;
        }
        return weights.empty() ? 0 : weights.size() - 1;
    }

    // Standard normal via Box-Muller; consumes two draws, no cached spare
    // (keeps the stream position a pure function of call count).
    double next_gaussian() {
        double u1 = next_double();
        double u2 = next_double();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    std::uint64_t state() const { return state_; }
    void set_state(std::uint64_t s) { state_ = s; }

private:
    std::uint64_t state_ = 0x853C49E6748FEA9BULL;
};

// Stable seed derivation for independent substreams: mixes a base seed with
// a stream tag so parallel workers never share a stream.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    SplitMix64 g(base ^ (0x9E3779B97F4A7C15ULL * (stream + 1)));
    g.next_u64();
    return g.next_u64();
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t substream) {
    return derive_seed(derive_seed(base, stream), substream);
}

// Fisher-Yates shuffle driven by SplitMix64 (std::shuffle is not
// reproducible across standard library implementations).
template <typename T>
void deterministic_shuffle(std::vector<T>& v, SplitMix64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.next_below(i));
        std::swap(v[i - 1], v[j]);
    }
}

} // namespace parlor
