#pragma once

#include <cstdint>
#include <stdexcept>

namespace sf::field {

// Modulus for all exact linear algebra. Default is the Mersenne prime 2^61-1;
// randomized rank results are correct up to Schwartz-Zippel failure odds of
// roughly (polynomial degree)/p per trial.
inline constexpr uint64_t kDefaultPrime = (uint64_t{1} << 61) - 1;

namespace detail {
inline uint64_t& prime_slot() {
    static uint64_t p = kDefaultPrime;
    return p;
}
}  // namespace detail

inline uint64_t prime() { return detail::prime_slot(); }

// Replaces the global modulus. Meant for cross-checking results at a second
// prime in tests; set it once before any computation, not concurrently.
inline void set_prime(uint64_t p) {
    if (p < 3 || p >= (uint64_t{1} << 62))
        throw std::invalid_argument("field::set_prime: prime must be in [3, 2^62)");
    detail::prime_slot() = p;
}

inline uint64_t reduce(uint64_t x) { return x % prime(); }

inline uint64_t add(uint64_t a, uint64_t b) {
    uint64_t s = a + b;  // no overflow: a, b < 2^62
    uint64_t p = prime();
    return s >= p ? s - p : s;
}

inline uint64_t sub(uint64_t a, uint64_t b) {
    return a >= b ? a - b : a + prime() - b;
}

inline uint64_t neg(uint64_t a) { return a == 0 ? 0 : prime() - a; }

inline uint64_t mul(uint64_t a, uint64_t b) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % prime());
}

inline uint64_t pow(uint64_t base, uint64_t exp) {
    uint64_t acc = 1;
    while (exp) {
        if (exp & 1) acc = mul(acc, base);
        base = mul(base, base);
        exp >>= 1;
    }
    return acc;
}

inline uint64_t inv(uint64_t a) {
    if (a == 0) throw std::domain_error("field::inv: zero has no inverse");
    return pow(a, prime() - 2);
}

}  // namespace sf::field
