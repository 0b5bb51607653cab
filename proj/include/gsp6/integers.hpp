#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gsp6 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

/// Legendre symbol (n/ell) for odd prime ell, via the Euler criterion.
inline int legendre(const Int& n, std::uint64_t ell) {
    if (ell < 3 || (ell & 1) == 0 || !is_prime_u64(ell))
        throw std::invalid_argument("legendre: modulus must be an odd prime");
    Int r = n % Int(ell);
    if (r < 0) r += ell;
    std::uint64_t m = r.convert_to<std::uint64_t>();
    if (m == 0) return 0;
    return powmod_u64(m, (ell - 1) / 2, ell) == 1 ? 1 : -1;
}

inline int legendre(long long n, std::uint64_t ell) { return legendre(Int(n), ell); }

/// Representative of v mod m in (-m/2, m/2].
inline Int centered_mod(const Int& v, const Int& m) {
    Int r = v % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

/// Canonical residue of v in [0, m).
inline std::uint64_t residue_u64(const Int& v, std::uint64_t m) {
    Int r = v % Int(m);
    if (r < 0) r += m;
    return r.convert_to<std::uint64_t>();
}

/// SplitMix64: tiny deterministic PRNG, identical output on every platform.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform draw in [0, n) by rejection; deterministic given the seed.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t lim = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do { v = next(); } while (v >= lim);
        return v % n;
    }

    /// Uniform signed draw in [-n, n].
    long long centered(std::uint64_t n) {
        return static_cast<long long>(below(2 * n + 1)) - static_cast<long long>(n);
    }
};

}  // namespace gsp6
