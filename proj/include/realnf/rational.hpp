#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace realnf {

using Int = mpz_class;
using Rat = mpq_class;

inline int sign_of(const Rat& r) { return sgn(r); }
inline int sign_of(const Int& n) { return sgn(n); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline Int int_pow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// b^e for integer e, e < 0 requires b != 0
inline Rat rat_pow(const Rat& b, long e) {
    if (e == 0) return Rat(1);
    unsigned long a = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rat r(int_pow(b.get_num(), a), int_pow(b.get_den(), a));
    r.canonicalize();
    if (e < 0) {
        if (r == 0) throw std::domain_error("rat_pow: zero to negative power");
        r = 1 / r;
    }
    return r;
}

inline std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Deterministic 64-bit PRNG used by the perturbation harness (splitmix64).
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
    // uniform integer in [lo, hi]
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

}  // namespace realnf
