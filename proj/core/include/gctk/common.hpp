#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace gctk {

/* Thrown when an operation refuses to start because a configured resource
   cap (candidate count, enumeration size, ...) would be exceeded.  Mapped to
   exit code 2 by the CLI; domain errors use std::invalid_argument (exit 1). */
class resource_cap_error : public std::runtime_error {
public:
    explicit resource_cap_error(const std::string& what) : std::runtime_error(what) {}
};

/* Fixed 62-bit prime used by all modular verification paths.
   2^62 - 57; primality checked by Miller-Rabin on every base < 38. */
inline constexpr std::uint64_t kModulusP62 = 4611686018427387847ULL;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    a += b;
    if (a >= p || a < b) a -= p;  // a < 2p always when inputs reduced
    return a % p;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) acc = mulmod(acc, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return acc;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw std::invalid_argument("invmod: zero residue");
    return powmod(a, p - 2, p);
}

/* Deterministic per-stream generator: a single run seed plus a stream tag
   yields an independent xorshift-seeded engine.  Streams with the same
   (seed, tag) are identical on every platform, which is what the CLI's
   byte-stability contract needs. */
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_tag) {
        state_ = splitmix(seed ^ (0x9E3779B97F4A7C15ULL * (stream_tag + 1)));
        if (state_ == 0) state_ = 0x106689D45497FDB5ULL;
    }

    std::uint64_t next() {  // xorshift64*
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1DULL;
    }

    /* Unbiased residue in [0, m) by rejection. */
    std::uint64_t below(std::uint64_t m) {
        const std::uint64_t limit = m * (~0ULL / m);
        std::uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % m;
    }

    /* Small signed integer in [lo, hi]. */
    long span(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    static std::uint64_t splitmix(std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    std::uint64_t state_;
};

mpz_class factorial(std::uint64_t n);

/* Exact quotient; throws std::logic_error if the division leaves a remainder.
   Used where integrality is a theorem and a failure means an internal bug. */
mpz_class exact_div(const mpz_class& num, const mpz_class& den, const char* context);

}  // namespace gctk
