#include "seqspan/span.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace seqspan {

namespace {

// Sequence bits reversed into a guard-padded buffer so the discrepancy at
// position pos is a windowed AND against the connection mask: with
// rbits[q] = s[total-1-q], the taps s[pos], s[pos-1], ..., line up with the
// window starting at total-1-pos.
struct ReversedBits {
    uint64_t total;
    std::vector<uint64_t> words;

    explicit ReversedBits(const BinarySequence& s) : total(2 * s.period()) {
        words.assign((total + 63) / 64 + 1, 0);
        const uint64_t N = s.period();
        for (uint64_t t = 0; t < total; ++t)
            if (s.get(t % N)) {
                const uint64_t q = total - 1 - t;
                words[q >> 6] |= static_cast<uint64_t>(1) << (q & 63);
            }
    }

    uint64_t window(uint64_t bitpos) const {
        const uint64_t i = bitpos >> 6;
        const uint64_t sh = bitpos & 63;
        return sh ? (words[i] >> sh) | (words[i + 1] << (64 - sh)) : words[i];
    }
};

bool discrepancy(const ReversedBits& rbits, const std::vector<uint64_t>& conn, uint64_t conn_bits,
                 uint64_t pos) {
    const uint64_t base = rbits.total - 1 - pos;
    uint64_t acc = 0;
    const uint64_t nwords = (conn_bits + 63) / 64;
    for (uint64_t w = 0; w < nwords; ++w) acc ^= conn[w] & rbits.window(base + 64 * w);
    return std::popcount(acc) & 1;
}

}  // namespace

BmResult berlekamp_massey(const BinarySequence& s) {
    check(s.period() >= 1, errc::period_mismatch, "sequence must have at least one bit");
    const ReversedBits rbits(s);
    const uint64_t total = rbits.total;
    const uint64_t capacity_words = total / 64 + 2;

    std::vector<uint64_t> conn(capacity_words, 0), prev(capacity_words, 0);
    conn[0] = prev[0] = 1;
    uint64_t span = 0;
    uint64_t shift = 1;

    // conn ^= prev << shift, word by word from the top.
    const auto fold_prev = [&](uint64_t sh) {
        const uint64_t word_shift = sh >> 6, bit_shift = sh & 63;
        for (uint64_t w = capacity_words; w-- > word_shift;) {
            uint64_t chunk = prev[w - word_shift] << bit_shift;
            if (bit_shift && w > word_shift) chunk |= prev[w - word_shift - 1] >> (64 - bit_shift);
            conn[w] ^= chunk;
        }
    };

    for (uint64_t pos = 0; pos < total; ++pos) {
        if (!discrepancy(rbits, conn, span + 1, pos)) {
            ++shift;
            continue;
        }
        if (2 * span <= pos) {
            std::vector<uint64_t> keep = conn;
            fold_prev(shift);
            span = pos + 1 - span;
            prev = std::move(keep);
            shift = 1;
        } else {
            fold_prev(shift);
            ++shift;
        }
    }

    for (uint64_t pos = span; pos < total; ++pos)
        check(!discrepancy(rbits, conn, span + 1, pos), errc::internal_check_failed,
              "connection polynomial fails to regenerate the sequence");

    BmResult res;
    res.span = span;
    res.poly.degree = span;
    res.poly.words.assign(conn.begin(), conn.begin() + (span / 64 + 1));
    return res;
}

uint64_t rho(const DeltaTerm& term, const std::optional<GammaClass>& gc) {
    if (!gc) return static_cast<uint64_t>(1) << term.weight;

    const uint64_t group = (static_cast<uint64_t>(1) << (term.m * term.k)) +
                           (gc->epsilon < 0 ? -1 : 1);

    // delta' lives mod 2^{mk} - 1, so bit mk-1 is cyclically adjacent to bit
    // 0 and a pattern set at both ends wraps into a single run. Rotate past
    // the lowest zero bit (delta' < 2^{mk} - 1 guarantees one) so the linear
    // decomposition sees the cyclic runs. Conjugation w -> w^2 doubles the
    // exponent and permutes the monomials, leaving the count unchanged.
    const unsigned width = term.m * term.k;
    uint64_t dp = term.delta_prime;
    if ((dp & 1) && (dp >> (width - 1))) {
        const unsigned r = static_cast<unsigned>(std::countr_one(dp)) + 1;
        dp = ((dp >> r) | (dp << (width - r))) & ((static_cast<uint64_t>(1) << width) - 1);
    }
    const RunProfile runs = run_decomposition(dp);

    uint64_t full = 1, collapsed = 1;
    for (const RunInterval& r : runs.intervals) {
        const uint64_t len = r.length();
        const uint64_t plain = (static_cast<uint64_t>(2) << len) - 1;  // 2^{len+1} - 1
        const uint64_t cut = 2 * ((((static_cast<uint64_t>(1) << len) - 1) * gc->g) / group);
        check(plain > cut, errc::internal_check_failed, "run factor must stay positive");
        full *= plain - cut;
        collapsed *= plain;
    }

    if (gc->in_F_prime && term.u == default_u(term.m, term.k).u)
        check(full == collapsed, errc::internal_check_failed,
              "floor terms must vanish inside F' for the layered u");
    return full;
}

uint64_t predicted_span(const FamilyParams& params, uint64_t h) {
    check(h < params.family_size(), errc::index_out_of_range, "h beyond family size 2^{mk}");
    std::optional<GammaClass> gc;
    if (h != 0) gc = classify_gamma(params, h);

    // One term per (member, v) pair. A unit u cannot send two pairs to the
    // same exponent mod 2^{mk} - 1 (the position sums are distinct integers
    // below the modulus), so each term stands alone; a repeat would mean the
    // pair cancels over GF(2), which the parity filter below would honor.
    std::map<uint64_t, std::pair<DeltaTerm, uint64_t>> terms;
    for (uint32_t member : params.index_set.members) {
        const unsigned w = static_cast<unsigned>(std::popcount(member));
        std::vector<uint32_t> v(w, 0);
        do {
            DeltaTerm dt = delta_term(member, v, params.u, params.m(), params.k());
            check(dt.delta_prime != 0, errc::internal_check_failed,
                  "unit exponent cannot vanish mod 2^{mk} - 1");
            auto [it, fresh] = terms.try_emplace(dt.delta_prime, std::move(dt), 0);
            ++it->second.second;
        } while (next_v_tuple(v, params.k()));
    }

    uint64_t total = 0;
    for (const auto& [dp, entry] : terms)
        if (entry.second % 2) total += rho(entry.first, gc);
    return total;
}

StaircaseSum staircase_sum(unsigned t, unsigned k, GammaKind kind) {
    check(t >= 1, errc::bad_exponent, "t must be at least 1");
    check(k >= 2 && k <= 8, errc::bad_exponent, "staircase sums need 2 <= k <= 8");
    check(t <= 12, errc::infeasible, "V^t enumeration too large");

    StaircaseSum out;
    for (unsigned m = t + 1;; ++m) {
        check(static_cast<uint64_t>(m) * k <= 62, errc::infeasible,
              "no workable m with gcd(k-1, 2^m-1) = 1 at this size");
        if (std::gcd<uint64_t>(k - 1, (static_cast<uint64_t>(1) << m) - 1) == 1) {
            out.m_used = m;
            break;
        }
    }

    const uint64_t u = default_u(out.m_used, k).u;
    const uint32_t staircase = (static_cast<uint32_t>(1) << t) - 1;

    bigint sum = 0;
    std::vector<uint32_t> v(t, 0);
    do {
        const DeltaTerm dt = delta_term(staircase, v, u, out.m_used, k);
        if (kind == GammaKind::zero) {
            sum += bigint(1) << dt.weight;
        } else {
            bigint prod = 1;
            for (const RunInterval& r : run_decomposition(dt.delta_prime).intervals)
                prod *= (bigint(2) << r.length()) - 1;
            sum += prod;
        }
    } while (next_v_tuple(v, k));
    out.enumerated = sum;

    if (kind == GammaKind::zero) {
        out.closed_form = pow(bigint(k) << (k - 1), t);
        check(out.enumerated == out.closed_form, errc::internal_check_failed,
              "zero-class staircase sum must equal the closed form");
    } else {
        out.closed_form = pow(bigint(3), k - 1) * k * pow(bigint(3 * k - 1) << (k - 2), t - 1);
        check(t == 1 ? out.enumerated == out.closed_form : out.enumerated > out.closed_form,
              errc::internal_check_failed,
              "staircase sum must meet the bound (equality only at t = 1)");
    }
    return out;
}

SpanBounds bounds(unsigned m, unsigned k) {
    check(m >= 2, errc::bad_exponent, "bounds need m >= 2");
    check(k >= 1, errc::bad_exponent, "bounds need k >= 1");

    SpanBounds b;
    b.L0 = bigint(m) * pow(bigint(k) << (k - 1), m - 1);
    if (k == 1)
        b.L1 = m;  // (3k-1)^{m-2} 2^{(k-2)(m-2)} collapses to 1
    else
        b.L1 = pow(bigint(3), k - 1) * m * k * pow(bigint(3 * k - 1) << (k - 2), m - 2);

    const bigint x = k == 1 ? bigint(2) : bigint(k) << (k - 1);
    const bigint sum = pow(x + 1, m) - 1 - pow(x, m);
    check(sum % 2 == 0, errc::internal_check_failed, "residue-class span sum must be even");
    b.residue_bound = sum / 2;
    return b;
}

ResiduePairSpans residue_pair_spans(unsigned m, unsigned k, uint32_t gamma_root) {
    auto tower = std::make_shared<const FieldTower>(FieldTower::make(m, k));
    const BinarySequence s0 =
        generate_section4_sequence(tower, LegendreSpec::make(m, 0, gamma_root));
    const BinarySequence s1 =
        generate_section4_sequence(tower, LegendreSpec::make(m, 1, gamma_root));

    ResiduePairSpans chk;
    chk.span0 = berlekamp_massey(s0).span;
    chk.span1 = berlekamp_massey(s1).span;
    const bigint x = k == 1 ? bigint(2) : bigint(k) << (k - 1);
    chk.expected_sum = pow(x + 1, m) - 1 - pow(x, m);
    return chk;
}

SpanReport span_report(const FamilyParams& params, uint64_t h, const BinarySequence* sequence) {
    check(h < params.family_size(), errc::index_out_of_range, "h beyond family size 2^{mk}");

    SpanReport rep;
    rep.digest = params.digest();
    rep.h = h;
    rep.gamma = params.gamma(h);
    if (h != 0) {
        rep.gamma_class = classify_gamma(params, h);
        rep.in_F_prime = rep.gamma_class->in_F_prime;
    } else {
        rep.in_F_prime = true;
    }

    BinarySequence own;
    if (!sequence) {
        own = generate_sequence(params, h);
        sequence = &own;
    }
    rep.measured_span = berlekamp_massey(*sequence).span;
    rep.predicted = predicted_span(params, h);

    const SpanBounds b = bounds(params.m(), params.k());
    rep.L0 = b.L0;
    rep.L1 = b.L1;
    if (params.index_set.zeta) rep.residue_bound = b.residue_bound;
    return rep;
}

}  // namespace seqspan
