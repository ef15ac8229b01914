#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "seqspan/errors.hpp"
#include "seqspan/numeric.hpp"

namespace seqspan {

// Orbit of x under doubling mod 2^m - 1, listed in doubling order from the
// smallest member.
struct CyclotomicCoset {
    uint32_t modulus = 0;
    uint32_t leader = 0;
    std::vector<uint32_t> elements;

    unsigned size() const { return static_cast<unsigned>(elements.size()); }
};

std::vector<CyclotomicCoset> cosets_mod(unsigned m);
CyclotomicCoset coset_of(uint32_t x, unsigned m);

// Maximal 1-runs [lo, hi] of a bit mask, least significant first. Consecutive
// intervals are separated by at least one zero bit, so hi_j + 2 <= lo_{j+1}.
struct RunInterval {
    unsigned lo = 0;
    unsigned hi = 0;

    unsigned length() const { return hi - lo + 1; }
};

struct RunProfile {
    uint64_t value = 0;
    std::vector<RunInterval> intervals;

    unsigned run_count() const { return static_cast<unsigned>(intervals.size()); }
};

RunProfile run_decomposition(uint64_t x);

// Exponent bookkeeping for one (i, v) pair: delta = sum_j u * 2^{m*v_j + i_j}
// over the set bits i_1 < ... < i_w of i, reduced mod 2^{mk} - 1.
// When u has the layered form default_u(m, k) with k >= 2 the reduction is
// recomputed through the rotation route (exponents m*((v_j + l) mod k) + i_j)
// and both answers are required to agree.
struct DeltaTerm {
    uint32_t i = 0;
    std::vector<uint32_t> v;
    uint64_t u = 0;
    unsigned m = 0;
    unsigned k = 0;
    uint64_t delta = 0;
    uint64_t delta_prime = 0;
    unsigned weight = 0;  // popcount(delta_prime)
};

DeltaTerm delta_term(uint32_t i, std::span<const uint32_t> v, uint64_t u, unsigned m, unsigned k);

// u = 1 + 2^m + ... + 2^{(k-2)m} (u = 1 when k = 1). gcd_value is
// gcd(u, 2^{mk} - 1), cross-checked against gcd(k - 1, 2^m - 1) for k >= 2.
struct DefaultU {
    uint64_t u = 0;
    uint64_t gcd_value = 0;
};

DefaultU default_u(unsigned m, unsigned k);

// Ascending set-bit positions of x.
std::vector<uint32_t> bit_positions(uint64_t x);

// Odometer over {0..k-1}^w in lexicographic order; returns false once v wraps
// back to all zeros.
inline bool next_v_tuple(std::vector<uint32_t>& v, unsigned k) {
    for (size_t idx = v.size(); idx-- > 0;) {
        if (++v[idx] < k) return true;
        v[idx] = 0;
    }
    return false;
}

}  // namespace seqspan
