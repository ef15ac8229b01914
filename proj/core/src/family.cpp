#include "seqspan/family.hpp"

#include <bit>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "seqspan/combinatorics.hpp"
#include "seqspan/parallel.hpp"

namespace seqspan {

FamilyParams FamilyParams::make(unsigned m, unsigned k, IndexSet set,
                                std::optional<uint64_t> custom_u) {
    auto tower = std::make_shared<const FieldTower>(FieldTower::make(m, k));
    check(set.m == m, errc::period_mismatch, "index set modulus does not match the tower");

    const uint64_t sub = set.modulus();
    bool has_unit = false;
    for (uint32_t i : set.members) has_unit = has_unit || std::gcd<uint64_t>(i, sub) == 1;
    check(has_unit, errc::no_unit_element, "index set needs a member coprime to 2^m - 1");

    const uint64_t big = (static_cast<uint64_t>(1) << (m * k)) - 1;
    if (!custom_u) {
        const DefaultU du = default_u(m, k);
        check(du.gcd_value == 1, errc::gcd_violation, "gcd(k-1, 2^m-1) != 1");
    }
    const uint64_t u = custom_u.value_or(default_u(m, k).u);
    check(u >= 1 && u < big, errc::gcd_violation, "u must lie in [1, 2^{mk} - 2]");
    check(std::gcd(u, big) == 1, errc::gcd_violation, "gcd(u, 2^{mk} - 1) must be 1");

    FamilyParams p;
    p.tower = std::move(tower);
    p.index_set = std::move(set);
    p.u = u;
    return p;
}

FieldElement FamilyParams::gamma(uint64_t h) const {
    check(h < family_size(), errc::index_out_of_range, "h beyond family size 2^{mk}");
    if (h == 0) return tower->zero();
    const int64_t subgroup_step = static_cast<int64_t>(family_size()) + 1;  // 2^{mk} + 1
    const FieldElement g = tower->pow(tower->alpha(), subgroup_step);
    return tower->pow(g, static_cast<int64_t>(h) - 1);
}

std::string FamilyParams::digest() const {
    std::ostringstream os;
    os << "m" << m() << "k" << k() << "-u" << u << "-I";
    for (size_t i = 0; i < index_set.leaders.size(); ++i) {
        if (i) os << ".";
        os << index_set.leaders[i];
    }
    if (index_set.zeta) os << "-z" << *index_set.zeta;
    return os.str();
}

GammaClass classify_gamma(const FamilyParams& params, uint64_t h) {
    check(h >= 1, errc::gamma_zero, "h = 0 has gamma = 0, which has no quadratic class");
    const FieldTower& tw = *params.tower;
    const uint64_t half = params.family_size();  // 2^{mk}

    const FieldElement gamma = params.gamma(h);
    const QuadraticRoot qr = tw.solve_unit_quadratic(gamma);

    // epsilon = -1: roots in F_{2^{mk}}^* = <alpha^{2^{mk}+1}>, order 2^{mk}-1.
    // epsilon = +1: roots in the order-(2^{mk}+1) subgroup = <alpha^{2^{mk}-1}>.
    const uint64_t subgroup_order = qr.epsilon < 0 ? half - 1 : half + 1;
    const uint64_t stride = qr.epsilon < 0 ? half + 1 : half - 1;

    const uint64_t dlog = tw.discrete_log(qr.root);
    check(dlog % stride == 0, errc::internal_check_failed,
          "quadratic root lies outside the expected subgroup");
    const uint64_t c0 = dlog / stride;
    check(c0 >= 1 && c0 < subgroup_order, errc::internal_check_failed,
          "root index out of subgroup range");

    GammaClass gc;
    gc.h = h;
    gc.epsilon = qr.epsilon;
    gc.c = std::min(c0, subgroup_order - c0);  // the two roots give c0 and -c0
    gc.g = std::gcd(gc.c, subgroup_order);

    const FieldElement folded = tw.pow(tw.alpha(), static_cast<int64_t>(gc.c * stride));
    check(folded == qr.root || folded == tw.add(gamma, qr.root), errc::internal_check_failed,
          "folded c does not index a root of the quadratic");
    check(gc.g < half / 2, errc::internal_check_failed, "g must stay below 2^{mk-1}");

    const uint64_t sub_half = static_cast<uint64_t>(1) << (params.m() - 1);  // 2^{m-1}
    if (qr.epsilon < 0)
        gc.in_F_prime = gc.g * (sub_half - 1) < half - 1;
    else
        gc.in_F_prime = gc.g * (sub_half + 1) < half + 1;
    return gc;
}

namespace {

// GF(2) value of sum_{i in I} z^i for every z in F_{2^m}, keyed by the bit
// pattern of z: table[beta^j] is bit j of the base sequence, table[0] = 0.
std::unordered_map<uint32_t, bool> power_sum_table(const FamilyParams& params) {
    const FieldTower& tw = *params.tower;
    const BinarySequence base = base_sequence(params.index_set, tw);

    std::unordered_map<uint32_t, bool> table;
    table.reserve(tw.sub_order() + 1);
    table[0] = false;
    FieldElement x = tw.one();
    for (uint64_t j = 0; j < tw.sub_order(); ++j) {
        table[x.bits] = base.get(j);
        x = tw.mul(x, tw.beta());
    }
    check(table.size() == tw.sub_order() + 1, errc::internal_check_failed,
          "beta does not enumerate the degree-m subfield");
    return table;
}

BinarySequence generate_with_table(const FamilyParams& params, uint64_t h,
                                   const std::unordered_map<uint32_t, bool>& table) {
    const FieldTower& tw = *params.tower;
    const unsigned mk = params.m() * params.k();
    const uint64_t N = params.period();

    const FieldElement gamma = params.gamma(h);
    const FieldElement alpha_sq = tw.square(tw.alpha());
    const FieldElement subgroup_gen = tw.pow(tw.alpha(), static_cast<int64_t>(params.family_size()) + 1);

    BinarySequence seq(N);
    FieldElement a2t = tw.one();  // alpha^{2t}
    FieldElement gt = tw.one();   // alpha^{(2^{mk}+1)t}
    for (uint64_t t = 0; t < N; ++t) {
        const FieldElement w = tw.add(tw.trace_to(a2t, mk), tw.mul(gamma, gt));
        const FieldElement z = tw.subfield_trace(tw.pow(w, static_cast<int64_t>(params.u)), params.m(), mk);
        seq.set(t, table.at(z.bits));
        a2t = tw.mul(a2t, alpha_sq);
        gt = tw.mul(gt, subgroup_gen);
    }
    return seq;
}

}  // namespace

BinarySequence generate_sequence(const FamilyParams& params, uint64_t h) {
    check(h < params.family_size(), errc::index_out_of_range, "h beyond family size 2^{mk}");
    return generate_with_table(params, h, power_sum_table(params));
}

std::vector<BinarySequence> generate_family(const FamilyParams& params, unsigned threads) {
    const auto table = power_sum_table(params);
    std::vector<BinarySequence> family(params.family_size());
    parallel_for(family.size(), threads,
                 [&](size_t h) { family[h] = generate_with_table(params, h, table); });
    return family;
}

SeqHeader make_seq_header(const FamilyParams& params, uint64_t h) {
    check(h < params.family_size(), errc::index_out_of_range, "h beyond family size 2^{mk}");
    SeqHeader header;
    header.n = params.n();
    header.m = params.m();
    header.k = params.k();
    header.u = params.u;
    header.h = h;
    header.leaders = params.index_set.leaders;
    header.period = params.period();
    return header;
}

BinarySequence generate_section4_sequence(std::shared_ptr<const FieldTower> tower,
                                          const LegendreSpec& spec) {
    check(tower != nullptr, errc::infeasible, "tower required");
    check(tower->m() == spec.m, errc::period_mismatch, "tower degree does not match the prime exponent");
    if (tower->k() >= 2)
        check(std::gcd<uint64_t>(tower->k() - 1, spec.p) == 1, errc::gcd_violation,
              "k - 1 must be coprime to p for the layered exponent");

    const LegendreIndexSet lis = legendre_index_set(spec, *tower);
    FamilyParams params;
    params.tower = std::move(tower);
    params.index_set = lis.set;
    params.u = default_u(params.m(), params.k()).u;
    check(std::gcd(params.u, (static_cast<uint64_t>(1) << (params.m() * params.k())) - 1) == 1,
          errc::gcd_violation, "default u is not coprime to 2^{mk} - 1");
    return generate_sequence(params, 0);
}

}  // namespace seqspan
