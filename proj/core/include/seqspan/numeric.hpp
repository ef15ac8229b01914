#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "seqspan/errors.hpp"

namespace seqspan {

// Trial-division factorization; adequate for the 64-bit ranges used here
// (group orders up to 2^32-1, totient arguments up to 2^33).
inline std::vector<std::pair<uint64_t, unsigned>> factorize(uint64_t x) {
    std::vector<std::pair<uint64_t, unsigned>> out;
    for (uint64_t f = 2; f * f <= x; f += (f == 2) ? 1 : 2) {
        if (x % f) continue;
        unsigned e = 0;
        while (x % f == 0) {
            x /= f;
            ++e;
        }
        out.emplace_back(f, e);
    }
    if (x > 1) out.emplace_back(x, 1);
    return out;
}

inline std::vector<uint64_t> prime_factors(uint64_t x) {
    std::vector<uint64_t> out;
    for (auto& [p, e] : factorize(x)) out.push_back(p);
    return out;
}

inline bool is_prime(uint64_t x) {
    if (x < 2) return false;
    auto f = factorize(x);
    return f.size() == 1 && f[0].second == 1;
}

inline uint64_t euler_phi(uint64_t t) {
    check(t >= 1, errc::index_out_of_range, "euler_phi requires t >= 1");
    uint64_t r = t;
    for (auto& [p, e] : factorize(t)) r -= r / p;
    return r;
}

// Extended gcd: returns g and x with a*x == g (mod mod), for inverses.
inline uint64_t inverse_mod(uint64_t a, uint64_t mod) {
    int64_t t = 0, nt = 1;
    int64_t r = static_cast<int64_t>(mod), nr = static_cast<int64_t>(a % mod);
    while (nr != 0) {
        int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    check(r == 1, errc::no_unit_element, "value not invertible in residue ring");
    if (t < 0) t += static_cast<int64_t>(mod);
    return static_cast<uint64_t>(t);
}

inline uint64_t mul_mod_u64(uint64_t a, uint64_t b, uint64_t mod) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % mod);
}

inline uint64_t pow_mod_u64(uint64_t a, uint64_t e, uint64_t mod) {
    uint64_t r = 1 % mod;
    a %= mod;
    while (e) {
        if (e & 1) r = mul_mod_u64(r, a, mod);
        a = mul_mod_u64(a, a, mod);
        e >>= 1;
    }
    return r;
}

// Smallest generator of (Z/pZ)* for prime p.
inline uint32_t smallest_primitive_root(uint32_t p) {
    check(is_prime(p), errc::not_mersenne_prime, "primitive root search requires a prime modulus");
    auto qs = prime_factors(p - 1);
    for (uint32_t g = 2; g < p; ++g) {
        bool ok = true;
        for (uint64_t q : qs) {
            if (pow_mod_u64(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    raise(errc::no_unit_element, "no primitive root found");
}

}  // namespace seqspan
