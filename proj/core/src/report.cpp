#include "seqspan/report.hpp"

#include <sstream>

namespace seqspan {

namespace {

bigint exact_div(const bigint& num, const bigint& den, const char* what) {
    check(num % den == 0, errc::internal_check_failed, what);
    return num / den;
}

}  // namespace

BoundTableRow bound_table_row(unsigned k, unsigned m) {
    check(k >= 3 && k <= 5, errc::bad_exponent, "bound table covers k in {3, 4, 5}");
    check(m >= 2, errc::bad_exponent, "bound table needs m >= 2");

    BoundTableRow row;
    row.k = k;
    row.m = m;
    row.n = 2 * m * k;
    const SpanBounds b = bounds(m, k);
    row.L0 = b.L0;
    row.L1 = b.L1;

    const bigint n = row.n;
    bigint l0_nform, l1_nform;
    switch (k) {
        case 3:  // n = 6m
            l0_nform = exact_div(pow(bigint(12), m) * n, 72, "12^{n/6} n / 72 must divide");
            l1_nform = exact_div(9 * n * (bigint(1) << (4 * m)), 512, "9n 2^{2n/3} / 512 must divide");
            break;
        case 4:  // n = 8m
            l0_nform = exact_div((bigint(1) << (5 * m)) * n, 256, "2^{5n/8} n / 256 must divide");
            l1_nform = exact_div(27 * n * pow(bigint(44), m), 3872, "27n 44^{n/8} / 3872 must divide");
            break;
        default:  // k = 5, n = 10m
            l0_nform = exact_div(pow(bigint(80), m) * n, 800, "80^{n/10} n / 800 must divide");
            l1_nform = exact_div(81 * n * pow(bigint(112), m), 25088, "81n 112^{n/10} / 25088 must divide");
            break;
    }
    check(l0_nform == row.L0, errc::internal_check_failed, "n-form of L0 disagrees with the (m, k) form");
    check(l1_nform == row.L1, errc::internal_check_failed, "n-form of L1 disagrees with the (m, k) form");
    return row;
}

std::vector<FamilyTableRow> family_table(unsigned m, unsigned k) {
    check(m >= 2, errc::bad_exponent, "family table needs m >= 2");
    check(k >= 1, errc::bad_exponent, "family table needs k >= 1");
    const unsigned n = 2 * m * k;
    const SpanBounds b = bounds(m, k);

    std::vector<FamilyTableRow> rows;

    FamilyTableRow bent{"bent-function", "4m", "2^{n/2}", "C(n/2, n/4) 2^{n/2}", std::nullopt};
    if (n % 4 == 0) {
        bigint binom = 1;
        for (unsigned i = 1; i <= n / 4; ++i) binom = binom * (n / 2 - i + 1) / i;
        bent.span_value = binom * (bigint(1) << (n / 2));
    }
    rows.push_back(std::move(bent));

    rows.push_back({"Kasami (small set)", "2m", "2^{n/2}", "3n/2",
                    n % 2 == 0 ? std::optional<bigint>(bigint(3) * n / 2) : std::nullopt});
    rows.push_back({"No", "2m", "2^{n/2}", "n(2^{n/2} - 1)/2",
                    exact_div(bigint(n) * ((bigint(1) << (n / 2)) - 1), 2, "No span column must halve")});

    // The staircase (single heavy index, u = 1) column 3n(3k-1)^{m-2}/2 and
    // our layered-u column 3^{k-1} n [2^{k-2}(3k-1)]^{m-2}/2; the latter must
    // equal L1 after substituting n = 2mk.
    if (m >= 2 && k >= 2) {
        const bigint tn = exact_div(bigint(3) * n * pow(bigint(3 * k - 1), m - 2), 2,
                                    "staircase span column must halve");
        rows.push_back({"staircase exponent (TN)", "2mk", "2^{n/2}", "> 3n(3k-1)^{m-2}/2", tn});

        const bigint ours = exact_div(
            pow(bigint(3), k - 1) * n * pow(bigint(3 * k - 1) << (k - 2), m - 2), 2,
            "layered span column must halve");
        check(ours == b.L1, errc::internal_check_failed,
              "layered-family table column must equal L1");
        rows.push_back({"layered exponent (this library)", "2mk", "2^{n/2}",
                        "> 3^{k-1} n [2^{k-2}(3k-1)]^{m-2}/2", ours});
    } else {
        rows.push_back({"layered exponent (this library)", "2mk", "2^{n/2}", "L1", b.L1});
    }
    return rows;
}

RatioCheck tn_ratio_check(unsigned m) {
    check(m >= 2, errc::bad_exponent, "ratio check needs m >= 2");
    RatioCheck rc;
    rc.m = m;
    rc.n = 6 * m;
    const bigint l1 = bounds(m, 3).L1;
    rc.lhs = l1 * l1 * pow(bigint(3), 3 * m - 6);
    rc.rhs = 81 * bigint(rc.n) * rc.n * pow(bigint(16), 3 * m - 6);
    rc.exceeds = rc.lhs > rc.rhs;
    return rc;
}

unsigned best_k_for_l0(unsigned n) {
    check(n >= 4 && n % 2 == 0, errc::bad_exponent, "degree must be even and at least 4");
    unsigned best = 0;
    bigint best_value = -1;
    for (unsigned k = 1; 2 * k <= n / 2; ++k) {
        if (n % (2 * k) != 0) continue;
        const unsigned m = n / (2 * k);
        const bigint l0 = bounds(m, k).L0;
        if (l0 > best_value) {
            best_value = l0;
            best = k;
        }
    }
    check(best != 0, errc::internal_check_failed, "no factorization n = 2mk with m >= 2");
    return best;
}

bool residue_bound_overtakes_l0(unsigned m, unsigned k) {
    const SpanBounds b = bounds(m, k);
    return b.residue_bound >= b.L0;
}

}  // namespace seqspan
