#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "seqspan/errors.hpp"

namespace seqspan {

// Element of GF(2^n), n <= 32, stored as the coefficient mask of its
// polynomial representative (bit i = coefficient of x^i).
struct FieldElement {
    uint32_t bits = 0;
    friend bool operator==(FieldElement, FieldElement) = default;
};

struct QuadraticRoot {
    int epsilon;        // -1 if y^2 + gamma*y + 1 splits over the half-degree subfield, +1 otherwise
    FieldElement root;  // canonical root (smaller bit pattern of the conjugate pair)
};

struct PrimPolyEntry {
    unsigned degree;
    uint64_t poly;  // bitmask including the leading x^degree term
};

// One compiled-in primitive polynomial per degree 2..32 (smallest by integer value).
std::span<const PrimPolyEntry> prim_poly_table();

// GF(2^n) with the subfield chain F_{2^m} < F_{2^{mk}} < F_{2^n}, n = 2mk.
// alpha = x is primitive by construction (verified against the factored group
// order on every construction); beta = alpha^T generates the degree-m subfield.
// Instances are immutable after construction and safe to share across threads.
class FieldTower {
public:
    static FieldTower make(unsigned m, unsigned k);

    unsigned n() const { return n_; }
    unsigned m() const { return m_; }
    unsigned k() const { return k_; }
    uint64_t prim_poly() const { return poly_; }
    uint64_t big_order() const { return N_; }   // 2^n - 1
    uint64_t sub_order() const { return M_; }   // 2^m - 1
    uint64_t lift_ratio() const { return T_; }  // (2^n - 1)/(2^m - 1)

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }
    FieldElement alpha() const { return {2}; }
    FieldElement beta() const { return beta_; }
    FieldElement element(uint32_t bits) const;

    FieldElement add(FieldElement a, FieldElement b) const { return {a.bits ^ b.bits}; }
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement square(FieldElement a) const { return mul(a, a); }
    FieldElement pow(FieldElement a, int64_t e) const;
    FieldElement inverse(FieldElement a) const;

    // tr^n_d: trace onto F_{2^d}, d | n.
    FieldElement trace_to(FieldElement x, unsigned d) const;
    // tr^{d_sup}_{d_sub} applied to x in F_{2^{d_sup}}; both degrees must divide n.
    FieldElement subfield_trace(FieldElement x, unsigned d_sub, unsigned d_sup) const;
    bool in_subfield(FieldElement x, unsigned d) const;

    // Exponent e with alpha^e == x; full table for n <= 20, baby-step/giant-step above.
    uint64_t discrete_log(FieldElement x) const;

    // Roots of y^2 + gamma*y + 1 over GF(2^n) for gamma in F_{2^{mk}}, gamma != 0.
    // epsilon is cross-checked against the subfield trace criterion.
    QuadraticRoot solve_unit_quadratic(FieldElement gamma) const;

private:
    FieldTower() = default;

    unsigned n_ = 0, m_ = 0, k_ = 0;
    uint64_t poly_ = 0;
    uint64_t N_ = 0, M_ = 0, T_ = 0;
    FieldElement beta_;

    std::vector<uint32_t> log_table_;                    // n <= 20: log_table_[bits] = dlog
    std::unordered_map<uint32_t, uint32_t> baby_steps_;  // n > 20
    uint64_t giant_stride_ = 0;
    FieldElement giant_factor_;  // alpha^{-giant_stride_}
};

}  // namespace seqspan
