#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace fcba {

// All randomness in an experiment derives from one master seed through named
// substreams ("partition", "init", "selection:12", "client:7:12", "noise:40", ...).
// Substream seeds are a hash of (master_seed, name), so streams are independent
// of each other and of execution order.

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline uint64_t substream_seed(uint64_t master, std::string_view name) {
    uint64_t h = 0xcbf29ce484222325ull; // FNV-1a
    for (unsigned char c : name) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return splitmix64(splitmix64(master) ^ h);
}

inline std::mt19937_64 substream_rng(uint64_t master, std::string_view name) {
    return std::mt19937_64(substream_seed(master, name));
}

inline std::string stream_name(std::string_view base, int a) {
    return std::string(base) + ":" + std::to_string(a);
}

inline std::string stream_name(std::string_view base, int a, int b) {
    return std::string(base) + ":" + std::to_string(a) + ":" + std::to_string(b);
}

} // namespace fcba
