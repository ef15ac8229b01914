#include "seqspan/field.hpp"

#include <cmath>

#include "seqspan/numeric.hpp"

namespace seqspan {

namespace {

// Smallest primitive polynomial per degree; regenerate with any CAS by
// checking ord(x) == 2^d - 1 against the factored group order.
constexpr PrimPolyEntry kPrimPolys[] = {
    {2, 0x7},          {3, 0xb},          {4, 0x13},         {5, 0x25},
    {6, 0x43},         {7, 0x83},         {8, 0x11d},        {9, 0x211},
    {10, 0x409},       {11, 0x805},       {12, 0x1053},      {13, 0x201b},
    {14, 0x402b},      {15, 0x8003},      {16, 0x1002d},     {17, 0x20009},
    {18, 0x40027},     {19, 0x80027},     {20, 0x100009},    {21, 0x200005},
    {22, 0x400003},    {23, 0x800021},    {24, 0x100001b},   {25, 0x2000009},
    {26, 0x4000047},   {27, 0x8000027},   {28, 0x10000009},  {29, 0x20000005},
    {30, 0x40000053},  {31, 0x80000009},  {32, 0x1000000afULL},
};

constexpr unsigned kMaxDegreeForLogTable = 20;

}  // namespace

std::span<const PrimPolyEntry> prim_poly_table() { return kPrimPolys; }

FieldElement FieldTower::element(uint32_t bits) const {
    check((static_cast<uint64_t>(bits) >> n_) == 0, errc::index_out_of_range,
          "element mask wider than the field degree");
    return {bits};
}

FieldElement FieldTower::mul(FieldElement a, FieldElement b) const {
    uint64_t acc = 0;
    uint64_t aa = a.bits;
    uint32_t bb = b.bits;
    while (bb) {
        if (bb & 1) acc ^= aa;
        bb >>= 1;
        aa <<= 1;
        if (aa >> n_ & 1) aa ^= poly_;
    }
    return {static_cast<uint32_t>(acc)};
}

FieldElement FieldTower::pow(FieldElement a, int64_t e) const {
    if (a.bits == 0) {
        if (e > 0) return zero();
        if (e == 0) return one();
        raise(errc::division_by_zero, "negative power of zero");
    }
    const auto ord = static_cast<int64_t>(N_);
    uint64_t exp = static_cast<uint64_t>(((e % ord) + ord) % ord);
    FieldElement r = one();
    FieldElement base = a;
    while (exp) {
        if (exp & 1) r = mul(r, base);
        base = mul(base, base);
        exp >>= 1;
    }
    return r;
}

FieldElement FieldTower::inverse(FieldElement a) const {
    check(a.bits != 0, errc::division_by_zero, "zero is not invertible");
    return pow(a, static_cast<int64_t>(N_) - 1);
}

bool FieldTower::in_subfield(FieldElement x, unsigned d) const {
    check(d >= 1 && n_ % d == 0, errc::degree_not_divisor, "subfield degree must divide n");
    FieldElement y = x;
    for (unsigned i = 0; i < d; ++i) y = square(y);
    return y == x;
}

FieldElement FieldTower::subfield_trace(FieldElement x, unsigned d_sub, unsigned d_sup) const {
    check(d_sub >= 1 && d_sup % d_sub == 0, errc::degree_not_divisor,
          "trace target degree must divide the source degree");
    check(n_ % d_sup == 0, errc::degree_not_divisor, "source degree must divide n");
    check(in_subfield(x, d_sup), errc::index_out_of_range, "element outside the stated source subfield");
    FieldElement acc = x;
    FieldElement cur = x;
    for (unsigned step = 1; step < d_sup / d_sub; ++step) {
        for (unsigned i = 0; i < d_sub; ++i) cur = square(cur);
        acc = add(acc, cur);
    }
    check(in_subfield(acc, d_sub), errc::internal_check_failed, "trace image escaped the target subfield");
    return acc;
}

FieldElement FieldTower::trace_to(FieldElement x, unsigned d) const { return subfield_trace(x, d, n_); }

uint64_t FieldTower::discrete_log(FieldElement x) const {
    check(x.bits != 0, errc::log_of_zero, "zero has no discrete log");
    if (!log_table_.empty()) return log_table_[x.bits];
    FieldElement y = x;
    for (uint64_t i = 0;; ++i) {
        auto it = baby_steps_.find(y.bits);
        if (it != baby_steps_.end()) {
            uint64_t e = i * giant_stride_ + it->second;
            check(e < N_, errc::internal_check_failed, "discrete log exceeded group order");
            return e;
        }
        check(i <= N_ / giant_stride_ + 1, errc::internal_check_failed, "discrete log search exhausted");
        y = mul(y, giant_factor_);
    }
}

QuadraticRoot FieldTower::solve_unit_quadratic(FieldElement gamma) const {
    const unsigned mk = m_ * k_;
    check(gamma.bits != 0, errc::gamma_zero, "unit quadratic requires gamma != 0");
    check(in_subfield(gamma, mk), errc::index_out_of_range, "gamma must lie in the half-degree subfield");

    // Substituting y = gamma*z turns y^2 + gamma*y + 1 = 0 into the
    // Artin-Schreier equation z^2 + z = gamma^-2, a GF(2)-linear system
    // over the polynomial basis.
    const FieldElement c = square(inverse(gamma));
    std::vector<uint64_t> rows(n_, 0);  // coefficient bits 0..n-1, rhs in bit 62
    for (unsigned j = 0; j < n_; ++j) {
        FieldElement ej{static_cast<uint32_t>(1) << j};
        uint32_t img = add(square(ej), ej).bits;
        for (unsigned i = 0; i < n_; ++i)
            if (img >> i & 1) rows[i] |= static_cast<uint64_t>(1) << j;
    }
    for (unsigned i = 0; i < n_; ++i)
        if (c.bits >> i & 1) rows[i] |= static_cast<uint64_t>(1) << 62;

    std::vector<int> pivot_of_col(n_, -1);
    unsigned next_row = 0;
    for (unsigned j = 0; j < n_ && next_row < n_; ++j) {
        unsigned p = next_row;
        while (p < n_ && !(rows[p] >> j & 1)) ++p;
        if (p == n_) continue;
        std::swap(rows[p], rows[next_row]);
        for (unsigned i = 0; i < n_; ++i)
            if (i != next_row && (rows[i] >> j & 1)) rows[i] ^= rows[next_row];
        pivot_of_col[j] = static_cast<int>(next_row);
        ++next_row;
    }
    for (unsigned i = next_row; i < n_; ++i)
        check(!(rows[i] >> 62 & 1), errc::internal_check_failed, "artin-schreier system inconsistent");

    uint32_t z = 0;  // free variables pinned to 0
    for (unsigned j = 0; j < n_; ++j)
        if (pivot_of_col[j] >= 0 && (rows[pivot_of_col[j]] >> 62 & 1)) z |= static_cast<uint32_t>(1) << j;

    const FieldElement r1 = mul(gamma, FieldElement{z});
    const FieldElement r2 = add(r1, gamma);
    const FieldElement canon = r1.bits < r2.bits ? r1 : r2;
    const FieldElement residual = add(add(square(canon), mul(gamma, canon)), one());
    check(residual.bits == 0, errc::internal_check_failed, "quadratic root failed residual check");

    const bool reducible = in_subfield(canon, mk);
    const bool trace_zero = subfield_trace(c, 1, mk).bits == 0;
    check(trace_zero == reducible, errc::internal_check_failed,
          "root location and trace criterion disagree on epsilon");
    return {reducible ? -1 : +1, canon};
}

FieldTower FieldTower::make(unsigned m, unsigned k) {
    check(m >= 2, errc::infeasible, "tower requires m >= 2");
    check(k >= 1, errc::infeasible, "tower requires k >= 1");
    const unsigned n = 2 * m * k;
    check(n <= 32, errc::infeasible, "tower degree 2mk exceeds the single-word cap of 32");

    FieldTower t;
    t.n_ = n;
    t.m_ = m;
    t.k_ = k;

    const PrimPolyEntry* entry = nullptr;
    for (const auto& e : prim_poly_table())
        if (e.degree == n) entry = &e;
    check(entry != nullptr, errc::no_polynomial_for_degree, "no compiled polynomial for this degree");
    t.poly_ = entry->poly;
    t.N_ = (static_cast<uint64_t>(1) << n) - 1;
    t.M_ = (static_cast<uint64_t>(1) << m) - 1;
    check(t.N_ % t.M_ == 0, errc::internal_check_failed, "subfield order must divide field order");
    t.T_ = t.N_ / t.M_;

    // Verify the table entry really has full multiplicative order before
    // anything downstream trusts alpha.
    check(t.pow(t.alpha(), static_cast<int64_t>(t.N_)).bits == 1, errc::primitivity_check_failed,
          "alpha^N != 1; polynomial table corrupted");
    for (uint64_t q : prime_factors(t.N_))
        check(t.pow(t.alpha(), static_cast<int64_t>(t.N_ / q)).bits != 1, errc::primitivity_check_failed,
              "alpha has non-maximal order; polynomial table corrupted");

    t.beta_ = t.pow(t.alpha(), static_cast<int64_t>(t.T_));

    if (n <= kMaxDegreeForLogTable) {
        t.log_table_.assign(static_cast<size_t>(1) << n, 0);
        FieldElement cur = t.one();
        for (uint64_t j = 0; j < t.N_; ++j) {
            t.log_table_[cur.bits] = static_cast<uint32_t>(j);
            cur = t.mul(cur, t.alpha());
        }
        check(cur.bits == 1, errc::internal_check_failed, "alpha orbit did not close");
    } else {
        const auto s = static_cast<uint64_t>(std::ceil(std::sqrt(static_cast<double>(t.N_))));
        t.giant_stride_ = s;
        t.baby_steps_.reserve(static_cast<size_t>(s));
        FieldElement cur = t.one();
        for (uint64_t j = 0; j < s; ++j) {
            t.baby_steps_.emplace(cur.bits, static_cast<uint32_t>(j));
            cur = t.mul(cur, t.alpha());
        }
        t.giant_factor_ = t.pow(t.alpha(), -static_cast<int64_t>(s));
    }
    return t;
}

}  // namespace seqspan
