#include "pgs2s/rng.hpp"

#include <vector>

namespace pgs2s {

namespace {

inline std::uint64_t splitmix_round(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
}

}  // namespace

std::uint64_t Rng::mix(std::uint64_t key, std::uint64_t counter) {
    std::uint64_t z = key + (counter + 1) * 0x9e3779b97f4a7c15ull;
    z = splitmix_round(z);
    z ^= key;
    return splitmix_round(z);
}

std::size_t Rng::index(std::size_t n) {
    // Lemire's multiply-shift; bias is negligible for n << 2^64.
    const unsigned __int128 wide =
        static_cast<unsigned __int128>(next_u64()) * static_cast<unsigned __int128>(n);
    return static_cast<std::size_t>(wide >> 64);
}

Rng Rng::split(std::uint64_t tag) const {
    Rng child;
    child.key_ = mix(key_ ^ 0xa02f4c17d1b8e693ull, tag);
    child.counter_ = 0;
    return child;
}

Rng Rng::split(std::string_view tag) const {
    // FNV-1a over the tag, then derive as with integer tags.
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return split(h);
}

}  // namespace pgs2s
