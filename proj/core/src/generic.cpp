#include "stressfree/generic.hpp"

#include <stdexcept>

#include "stressfree/field.hpp"

namespace sf {

namespace {
constexpr uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}
}  // namespace

uint64_t counter_random_u64(uint64_t seed, uint64_t counter) {
    return mix64(seed + (counter + 1) * kGoldenGamma);
}

uint64_t counter_random_field(uint64_t seed, uint64_t counter) {
    return counter_random_u64(seed, counter) % field::prime();
}

GenericConfiguration generic_configuration(uint64_t seed, int n, int d) {
    if (n < 0 || d < 1) throw std::invalid_argument("generic_configuration: need n >= 0, d >= 1");
    GenericConfiguration cfg;
    cfg.seed = seed;
    cfg.n = n;
    cfg.d = d;
    cfg.coords.resize(static_cast<size_t>(n) * d);
    for (size_t k = 0; k < cfg.coords.size(); ++k)
        cfg.coords[k] = counter_random_field(seed, k);
    return cfg;
}

std::vector<uint64_t> trial_seeds(uint64_t base_seed, int trials) {
    if (trials < 1) throw std::invalid_argument("trial_seeds: need trials >= 1");
    std::vector<uint64_t> seeds(trials);
    for (int i = 0; i < trials; ++i) seeds[i] = base_seed + static_cast<uint64_t>(i);
    return seeds;
}

}  // namespace sf
