#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seqspan/span.hpp"

namespace seqspan {

// Bound table for the tall-k towers (k in {3, 4, 5}, n = 2mk). L0 and L1 are
// evaluated from the (m, k) closed forms and re-derived from the substituted
// n-forms (e.g. k = 3: L0 = 12^{n/6} n / 72, L1 = 9n 2^{2n/3} / 512); the two
// routes must agree exactly.
struct BoundTableRow {
    unsigned k = 0;
    unsigned m = 0;
    unsigned n = 0;
    bigint L0;
    bigint L1;
};

BoundTableRow bound_table_row(unsigned k, unsigned m);

// Summary rows of known period-2^n-1 families with optimal correlation and
// their maximum-linear-span column; span_value is filled when the column is
// a closed form evaluable at (m, k).
struct FamilyTableRow {
    std::string family;
    std::string degree_form;  // n in terms of m, k
    std::string size_form;
    std::string span_form;
    std::optional<bigint> span_value;
};

std::vector<FamilyTableRow> family_table(unsigned m, unsigned k);

// Exact-integer comparison of L1 at k = 3 (n = 6m) against the staircase
// family's span ceiling U_TN = 9n(16/3)^{n/4-3}:
//   L1/U_TN > 1  iff  L1^2 * 3^{3m-6} > 81 n^2 16^{3m-6}.
struct RatioCheck {
    unsigned m = 0;
    unsigned n = 0;
    bigint lhs;
    bigint rhs;
    bool exceeds = false;
};

RatioCheck tn_ratio_check(unsigned m);

// argmax of L0 over the k with 2k | n (smallest k on ties).
unsigned best_k_for_l0(unsigned n);

// Whether the residue-class bound reaches m(2^{k-1}k)^{m-1}.
bool residue_bound_overtakes_l0(unsigned m, unsigned k);

}  // namespace seqspan
