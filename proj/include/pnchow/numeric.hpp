#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace pnchow {

// Exact arithmetic throughout: coefficients of characteristic classes and
// matrix entries grow binomially in n, so everything is gmp-backed.
using Int = mpz_class;
using Rat = mpq_class;

inline Int binomial(long top, long k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (top < 0 || k > top) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top),
                 static_cast<unsigned long>(k));
    return r;
}

inline Int factorial(long k) {
    if (k < 0) throw std::invalid_argument("factorial of negative argument");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("negative power of zero");
        Rat inv = 1 / base;
        return rat_pow(inv, -e);
    }
    Rat r = 1;
    for (long i = 0; i < e; ++i) r *= base;
    return r;
}

inline int parity_sign(long k) { return (k % 2 == 0) ? 1 : -1; }

// Deterministic 64-bit generator. Sampling probes derive one independent
// stream per (seed, sample index), so reports are reproducible regardless
// of execution order.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform integer in [lo, hi], rejection-sampled to avoid modulo bias
    long uniform(long lo, long hi) {
        if (hi < lo) throw std::invalid_argument("empty sample range");
        std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t limit = (UINT64_MAX / range) * range;
        for (;;) {
            std::uint64_t u = next();
            if (u < limit) return lo + static_cast<long>(u % range);
        }
    }

  private:
    std::uint64_t state_;
};

inline SplitMix64 sample_stream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(seed ^ (0xD1B54A32D192ED03ULL * (index + 1)));
}

}  // namespace pnchow
