#include "midi/util/rng.hpp"

namespace midi::util {

uint64_t fnv1a64(const void* data, size_t len, uint64_t seed) {
    const auto* p = static_cast<const unsigned char*>(data);
    uint64_t h = seed;
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

uint64_t fnv1a64(std::string_view s, uint64_t seed) {
    return fnv1a64(s.data(), s.size(), seed);
}

}  // namespace midi::util
