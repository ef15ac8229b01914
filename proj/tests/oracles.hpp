#pragma once

// Definition-level oracles kept deliberately slow and simple. They share no
// code path with the library routines they cross-check.

#include <cstdint>
#include <vector>

#include <seqspan/bitseq.hpp>
#include <seqspan/field.hpp>

namespace oracles {

// Oracle for the shortest recurrence: try L = 0, 1, 2, ... and test by
// Gaussian elimination whether any c_1..c_L satisfies
//   s_t = c_1 s_{t-1} + ... + c_L s_{t-L}  for all t in [L, 2N).
inline uint64_t minimal_recurrence_scan(const seqspan::BinarySequence& s) {
    const uint64_t total = 2 * s.period();
    std::vector<int> bits(total);
    for (uint64_t t = 0; t < total; ++t) bits[t] = s.get(t % s.period());

    for (uint64_t L = 0; L <= s.period(); ++L) {
        // rows: [s_{t-1} ... s_{t-L} | s_t], one per t
        std::vector<std::vector<int>> rows;
        for (uint64_t t = L; t < total; ++t) {
            std::vector<int> row(L + 1);
            for (uint64_t j = 1; j <= L; ++j) row[j - 1] = bits[t - j];
            row[L] = bits[t];
            rows.push_back(row);
        }
        // eliminate; inconsistent iff a zero row has rhs 1
        size_t rank_col = 0;
        bool consistent = true;
        for (size_t col = 0; col < L && rank_col < rows.size(); ++col) {
            size_t pivot = rank_col;
            while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
            if (pivot == rows.size()) continue;
            std::swap(rows[pivot], rows[rank_col]);
            for (size_t r = 0; r < rows.size(); ++r)
                if (r != rank_col && rows[r][col])
                    for (size_t c = col; c <= L; ++c) rows[r][c] ^= rows[rank_col][c];
            ++rank_col;
        }
        for (size_t r = rank_col; r < rows.size(); ++r)
            if (rows[r][L]) consistent = false;
        if (consistent) return L;
    }
    return s.period();
}

// Oracle for the monomial count: expand (1 + gamma y + y^2)^d in the ring
// F_{2^{mk}}[y] / (y^{2^{mk}+1} - 1) by plain square-and-multiply polynomial
// products, then count nonzero coefficients.
inline uint64_t monomial_count_oracle(const seqspan::FieldTower& tw, seqspan::FieldElement gamma,
                                      uint64_t d) {
    const size_t mod = (size_t(1) << (tw.n() / 2)) + 1;
    auto multiply = [&](const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        std::vector<uint32_t> out(mod, 0);
        for (size_t i = 0; i < mod; ++i) {
            if (!a[i]) continue;
            for (size_t j = 0; j < mod; ++j) {
                if (!b[j]) continue;
                const size_t e = (i + j) % mod;
                out[e] ^= tw.mul(tw.element(a[i]), tw.element(b[j])).bits;
            }
        }
        return out;
    };

    std::vector<uint32_t> base(mod, 0);
    base[0] = 1;
    base[1] = gamma.bits;
    base[2] = 1;
    std::vector<uint32_t> acc(mod, 0);
    acc[0] = 1;
    for (int bit = 63; bit >= 0; --bit) {
        acc = multiply(acc, acc);
        if ((d >> bit) & 1) acc = multiply(acc, base);
    }
    uint64_t nonzero = 0;
    for (uint32_t c : acc) nonzero += c != 0;
    return nonzero;
}

}  // namespace oracles
