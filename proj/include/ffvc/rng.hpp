#pragma once

#include <cstdint>
#include <string_view>

namespace ffvc {

// Counter-based generator: draw i of a stream is a pure function of
// (seed, i). Streams are cheap to split and bit-identical across runs and
// worker counts.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Stream derivation: hash(master_seed, stream_id).
inline uint64_t derive_seed(uint64_t master, uint64_t stream_id) {
    return splitmix64(splitmix64(master) ^ splitmix64(stream_id ^ 0xa5a5a5a5a5a5a5a5ULL));
}
inline uint64_t derive_seed(uint64_t master, std::string_view stream_key) {
    return derive_seed(master, fnv1a64(stream_key));
}

class CounterRng {
public:
    explicit CounterRng(uint64_t seed) : seed_(seed) {}

    uint64_t next() { return splitmix64(seed_ ^ splitmix64(counter_++)); }

    // Uniform in [0, bound). 64 fresh bits per draw make the modulo bias
    // negligible (< 2^-32 for bound < 2^31).
    uint64_t next_below(uint64_t bound) { return next() % bound; }

private:
    uint64_t seed_;
    uint64_t counter_ = 0;
};

} // namespace ffvc
