#pragma once

#include <cstdint>
#include <string_view>

namespace pgs2s {

// Splittable counter-based generator: output i of a stream is a pure function
// of (key, i), so streams can be split without sharing state and identical
// seeds always reproduce identical draws regardless of interleaving.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : key_(mix(seed ^ kSeedDomain, 0)) {}

    std::uint64_t next_u64() { return mix(key_, counter_++); }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform integer in [0, n)
    std::size_t index(std::size_t n);

    bool bernoulli(double p) { return uniform() < p; }

    // Derives an independent stream; children with distinct tags are disjoint.
    Rng split(std::uint64_t tag) const;
    Rng split(std::string_view tag) const;

  private:
    Rng() = default;
    static std::uint64_t mix(std::uint64_t key, std::uint64_t counter);
    static constexpr std::uint64_t kSeedDomain = 0x8e8c3b4a9d1f2c51ull;

    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
};

// Fisher-Yates shuffle of index vector contents.
template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const std::size_t j = rng.index(i);
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace pgs2s
