#ifndef MIDI_UTIL_RNG_HPP
#define MIDI_UTIL_RNG_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace midi::util {

/// 64-bit FNV-1a. Used for deterministic stream derivation and region digests.
uint64_t fnv1a64(const void* data, size_t len, uint64_t seed = 0xcbf29ce484222325ULL);
uint64_t fnv1a64(std::string_view s, uint64_t seed = 0xcbf29ce484222325ULL);

/// Deterministic random stream. Wraps mt19937_64 (whose raw output sequence is
/// fully specified by the standard) and supplies its own bounded sampling so
/// results are identical across platforms and standard library implementations.
class rng_stream {
public:
    explicit rng_stream(uint64_t seed) : engine_(seed), root_(seed) {}

    uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, n). n must be > 0.
    uint64_t bounded(uint64_t n) {
        if (n == 0) throw std::invalid_argument("rng_stream::bounded: n == 0");
        // Rejection sampling to remove modulo bias.
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % n;
    }

    /// Uniform in [lo, hi] inclusive.
    int64_t range(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(bounded(static_cast<uint64_t>(hi - lo + 1)));
    }

    /// Uniform in [0, 1).
    double real() {
        return static_cast<double>(engine_() >> 11) * (1.0 / 9007199254740992.0);
    }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        if (v.empty()) throw std::invalid_argument("rng_stream::pick: empty");
        return v[bounded(v.size())];
    }

    /// Child stream keyed by this stream's seed and a label. Does not consume
    /// state from the parent, so derivation order never changes results.
    rng_stream derive(std::string_view label) const {
        return rng_stream(fnv1a64(label, root_ ^ 0x9e3779b97f4a7c15ULL));
    }

    static rng_stream seeded(uint64_t master, std::string_view label) {
        return rng_stream(fnv1a64(label, master ^ 0x9e3779b97f4a7c15ULL));
    }

private:
    std::mt19937_64 engine_;
    uint64_t root_;
};

}  // namespace midi::util

#endif
