#pragma once

#include <cstdint>
#include <vector>

namespace sf {

// Library-wide defaults; bare runs must be reproducible, so the seed is a
// constant rather than wall-clock time.
inline constexpr uint64_t kDefaultSeed = 1729;
inline constexpr int kDefaultTrials = 3;

// Counter-based generator: the k-th output for a given seed is
// splitmix64_mix(seed + (k+1)*golden_gamma). Stateless and O(1) per index.
uint64_t counter_random_u64(uint64_t seed, uint64_t counter);

// Same stream reduced into [0, p) for the current field prime.
uint64_t counter_random_field(uint64_t seed, uint64_t counter);

// Seeded stand-in for a generic d-embedding: a d x n table of field elements,
// reconstructible bit-exactly from (seed, n, d).
struct GenericConfiguration {
    uint64_t seed = 0;
    int n = 0;
    int d = 0;
    std::vector<uint64_t> coords;  // row-major, coords[i*n + (v-1)]

    // i-th coordinate (0-based, i < d) of vertex v (1-based).
    uint64_t coord(int i, int v) const { return coords[static_cast<size_t>(i) * n + (v - 1)]; }
};

GenericConfiguration generic_configuration(uint64_t seed, int n, int d);

// The per-trial seeds used by every randomized routine: base, base+1, ...
std::vector<uint64_t> trial_seeds(uint64_t base_seed, int trials);

}  // namespace sf
