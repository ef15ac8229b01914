#include "seqspan/combinatorics.hpp"

#include <bit>

namespace seqspan {

std::vector<uint32_t> bit_positions(uint64_t x) {
    std::vector<uint32_t> out;
    out.reserve(static_cast<size_t>(std::popcount(x)));
    while (x) {
        out.push_back(static_cast<uint32_t>(std::countr_zero(x)));
        x &= x - 1;
    }
    return out;
}

CyclotomicCoset coset_of(uint32_t x, unsigned m) {
    check(m >= 2 && m <= 25, errc::infeasible, "coset modulus degree out of range");
    const uint32_t mod = (static_cast<uint32_t>(1) << m) - 1;
    check(x >= 1 && x < mod, errc::index_out_of_range, "coset representative outside [1, 2^m - 2]");

    uint32_t leader = x;
    uint32_t cur = x;
    do {
        cur = static_cast<uint32_t>((static_cast<uint64_t>(cur) * 2) % mod);
        if (cur < leader) leader = cur;
    } while (cur != x);

    CyclotomicCoset c;
    c.modulus = mod;
    c.leader = leader;
    cur = leader;
    do {
        c.elements.push_back(cur);
        cur = static_cast<uint32_t>((static_cast<uint64_t>(cur) * 2) % mod);
    } while (cur != leader);
    check(m % c.elements.size() == 0, errc::internal_check_failed, "coset size must divide m");
    return c;
}

std::vector<CyclotomicCoset> cosets_mod(unsigned m) {
    check(m >= 2 && m <= 25, errc::infeasible, "coset modulus degree out of range");
    const uint32_t mod = (static_cast<uint32_t>(1) << m) - 1;
    std::vector<bool> seen(mod, false);
    std::vector<CyclotomicCoset> out;
    for (uint32_t x = 1; x < mod; ++x) {
        if (seen[x]) continue;
        CyclotomicCoset c = coset_of(x, m);
        for (uint32_t e : c.elements) seen[e] = true;
        out.push_back(std::move(c));
    }
    return out;
}

RunProfile run_decomposition(uint64_t x) {
    RunProfile p;
    p.value = x;
    unsigned pos = 0;
    uint64_t rest = x;
    while (rest) {
        const unsigned skip = static_cast<unsigned>(std::countr_zero(rest));
        pos += skip;
        rest >>= skip;
        const unsigned len = static_cast<unsigned>(std::countr_one(rest));
        p.intervals.push_back({pos, pos + len - 1});
        pos += len;
        rest >>= len;
    }
    return p;
}

DefaultU default_u(unsigned m, unsigned k) {
    check(m >= 2, errc::infeasible, "default_u requires m >= 2");
    check(k >= 1, errc::infeasible, "default_u requires k >= 1");
    check(static_cast<uint64_t>(m) * k <= 62, errc::infeasible, "mk too large for 64-bit exponents");

    uint64_t u = 1;
    for (unsigned j = 1; j + 1 < k; ++j) u |= static_cast<uint64_t>(1) << (m * j);
    if (k == 1) u = 1;

    const uint64_t big = (static_cast<uint64_t>(1) << (m * k)) - 1;
    const uint64_t direct = std::gcd(u, big);
    if (k >= 2) {
        const uint64_t sub = (static_cast<uint64_t>(1) << m) - 1;
        check(direct == std::gcd<uint64_t>(k - 1, sub), errc::internal_check_failed,
              "layered-u gcd shortcut disagrees with direct gcd");
    }
    return {u, direct};
}

DeltaTerm delta_term(uint32_t i, std::span<const uint32_t> v, uint64_t u, unsigned m, unsigned k) {
    check(m >= 2, errc::infeasible, "delta_term requires m >= 2");
    check(k >= 1, errc::infeasible, "delta_term requires k >= 1");
    check(static_cast<uint64_t>(m) * k <= 62, errc::infeasible, "mk too large for 64-bit exponents");
    const uint64_t sub = (static_cast<uint64_t>(1) << m) - 1;
    const uint64_t big = (static_cast<uint64_t>(1) << (m * k)) - 1;
    check(i >= 1 && i < sub, errc::bad_exponent, "i must lie in [1, 2^m - 2]");
    check(u >= 1, errc::bad_exponent, "u must be positive");
    check(std::gcd(u, big) == 1, errc::gcd_violation, "u must be coprime to 2^{mk} - 1");

    const auto ibits = bit_positions(i);
    check(v.size() == ibits.size(), errc::bad_exponent, "v needs one coordinate per set bit of i");
    for (uint32_t vj : v) check(vj < k, errc::bad_exponent, "v coordinate outside [0, k-1]");

    __uint128_t delta = 0;
    for (size_t j = 0; j < ibits.size(); ++j)
        delta += static_cast<__uint128_t>(u) << (static_cast<uint64_t>(m) * v[j] + ibits[j]);
    check(delta <= ~static_cast<uint64_t>(0), errc::infeasible, "delta exceeds 64 bits");

    DeltaTerm t;
    t.i = i;
    t.v.assign(v.begin(), v.end());
    t.u = u;
    t.m = m;
    t.k = k;
    t.delta = static_cast<uint64_t>(delta);
    t.delta_prime = static_cast<uint64_t>(delta % big);

    if (k >= 2 && u == default_u(m, k).u) {
        uint64_t rotated = 0;
        for (size_t j = 0; j < ibits.size(); ++j)
            for (unsigned l = 0; l + 1 < k; ++l)
                rotated |= static_cast<uint64_t>(1) << (m * ((v[j] + l) % k) + ibits[j]);
        check(rotated == t.delta_prime, errc::internal_check_failed,
              "rotation route disagrees with direct reduction of delta");
    }

    t.weight = static_cast<unsigned>(std::popcount(t.delta_prime));
    return t;
}

}  // namespace seqspan
