#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "seqspan/bitseq.hpp"
#include "seqspan/combinatorics.hpp"
#include "seqspan/family.hpp"

namespace seqspan {

using bigint = boost::multiprecision::cpp_int;

// C(x) = 1 + c_1 x + ... + c_L x^L of the shortest recurrence
// s_t = c_1 s_{t-1} + ... + c_L s_{t-L} over GF(2); bit j of words = c_j.
struct ConnectionPoly {
    uint64_t degree = 0;
    std::vector<uint64_t> words;

    bool coeff(uint64_t j) const {
        check(j <= degree, errc::index_out_of_range, "coefficient index beyond degree");
        return (words[j >> 6] >> (j & 63)) & 1;
    }
};

struct BmResult {
    uint64_t span = 0;
    ConnectionPoly poly;
};

// Runs over two periods (2N bits), which pins down the minimal recurrence of
// an N-periodic sequence; the result is verified by regenerating every bit
// from position span onward before returning.
BmResult berlekamp_massey(const BinarySequence& s);

// Monomial count contributed by one (i, v) exponent term. No gamma class
// (gamma = 0): 2^{weight(delta')}. Otherwise the run-product
//   prod_j ( 2^{L_j+1} - 1 - 2*floor((2^{L_j}-1)*g / (2^{mk}+epsilon)) )
// over the 1-runs of delta'. delta' is an exponent mod 2^{mk} - 1, so its
// bit pattern is defined only up to rotation (conjugation preserves the
// count); the runs are read cyclically, on a conjugate that does not wrap
// past bit mk-1. For classes inside F' with the layered default u the floor
// terms must vanish, so the plain product prod (2^{L_j+1} - 1) is computed
// as well and both must agree.
uint64_t rho(const DeltaTerm& term, const std::optional<GammaClass>& gc);

// Exact span of s_h from the monomial-counting route. Expanding
// (sum_j z^{u 2^{mj}})^i for every member i of I gives one z^{delta'} term
// per (i, v) pair, each contributing rho(i, v) monomials. The exponents are
// pairwise distinct for any unit u (the bit-position sums are distinct
// integers below 2^{mk} - 1 and u is invertible), so the sum equals
// sum over leaders of e_i * sum_{v in V^{w(i)}} rho(i, v).
uint64_t predicted_span(const FamilyParams& params, uint64_t h);

enum class GammaKind { zero, f_prime };

// V^t sums for the weight-t staircase exponent i^(t) = 2^t - 1 under the
// layered default u. closed_form is exact for the zero kind and a lower
// bound for the f_prime kind; enumerated is the direct sum. The bound is
// strict for t >= 2 and met with equality at t = 1.
struct StaircaseSum {
    bigint closed_form;
    bigint enumerated;
    unsigned m_used = 0;  // smallest m > t with gcd(k-1, 2^m-1) = 1
};

StaircaseSum staircase_sum(unsigned t, unsigned k, GammaKind kind);

// L0 = m(2^{k-1}k)^{m-1} (span of s_0), L1 = 3^{k-1}mk[2^{k-2}(3k-1)]^{m-2}
// (strict lower bound for F' members, h != 0; equals m when k = 1), and
// residue_bound = ((1+X)^m - 1 - X^m)/2 with X = 2^{k-1}k for k >= 2 and
// X = 2 for k = 1, the guarantee for residue-class index sets.
struct SpanBounds {
    bigint L0;
    bigint L1;
    bigint residue_bound;
};

SpanBounds bounds(unsigned m, unsigned k);

// Builds both residue-class sequences (zeta = 0 and 1) over one tower,
// measures their spans, and returns them with the closed-form value their
// sum must equal: (1+X)^m - 1 - X^m.
struct ResiduePairSpans {
    uint64_t span0 = 0;
    uint64_t span1 = 0;
    bigint expected_sum;
};

ResiduePairSpans residue_pair_spans(unsigned m, unsigned k, uint32_t gamma_root);

struct SpanReport {
    std::string digest;
    uint64_t h = 0;
    FieldElement gamma;
    std::optional<GammaClass> gamma_class;  // empty at h = 0
    bool in_F_prime = false;                // gamma = 0 counts as inside F'
    uint64_t measured_span = 0;
    uint64_t predicted = 0;
    bigint L0;
    bigint L1;
    std::optional<bigint> residue_bound;  // set for residue-class index sets
};

// Measures (or reuses a pre-generated sequence), predicts, and attaches the
// applicable bounds for one family member.
SpanReport span_report(const FamilyParams& params, uint64_t h,
                       const BinarySequence* sequence = nullptr);

}  // namespace seqspan
