#include "seqspan/idealseq.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "seqspan/correlation.hpp"

namespace seqspan {

IndexSet IndexSet::from_leaders(unsigned m, std::span<const uint32_t> leaders, std::optional<int> zeta) {
    IndexSet s;
    s.m = m;
    s.zeta = zeta;
    std::set<uint32_t> canon;
    std::set<uint32_t> members;
    for (uint32_t l : leaders) {
        const CyclotomicCoset c = coset_of(l, m);
        if (!canon.insert(c.leader).second) continue;
        members.insert(c.elements.begin(), c.elements.end());
    }
    s.leaders.assign(canon.begin(), canon.end());
    s.members.assign(members.begin(), members.end());
    return s;
}

IndexSet IndexSet::from_members(unsigned m, std::span<const uint32_t> members, std::optional<int> zeta) {
    IndexSet s = from_leaders(m, members, zeta);
    // Expanding the cosets of the given values must not add anything new,
    // otherwise the input was not closed under doubling.
    check(s.members.size() == std::set<uint32_t>(members.begin(), members.end()).size(),
          errc::value_not_binary, "member list is not closed under doubling mod 2^m - 1");
    return s;
}

bool IndexSet::normalized() const {
    return contains((static_cast<uint32_t>(1) << (m - 1)) - 1);
}

bool IndexSet::contains(uint32_t i) const {
    return std::binary_search(members.begin(), members.end(), i);
}

std::string index_set_to_json(const IndexSet& set) {
    nlohmann::json j;
    j["m"] = set.m;
    j["leaders"] = set.leaders;
    j["zeta"] = set.zeta ? nlohmann::json(*set.zeta) : nlohmann::json(nullptr);
    return j.dump();
}

IndexSet index_set_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    std::optional<int> zeta;
    if (j.contains("zeta") && !j["zeta"].is_null()) zeta = j["zeta"].get<int>();
    const auto leaders = j["leaders"].get<std::vector<uint32_t>>();
    return IndexSet::from_leaders(j["m"].get<unsigned>(), leaders, zeta);
}

BinarySequence base_sequence(const IndexSet& set, const FieldTower& tower) {
    check(set.m == tower.m(), errc::period_mismatch, "index set modulus does not match the tower");
    const uint64_t M = tower.sub_order();
    BinarySequence out(M);

    struct LeaderState {
        FieldElement step;     // beta^leader
        FieldElement running;  // beta^{leader * t}
        unsigned orbit;        // coset size
    };
    std::vector<LeaderState> states;
    states.reserve(set.leaders.size());
    for (uint32_t l : set.leaders)
        states.push_back({tower.pow(tower.beta(), l), tower.one(),
                          coset_of(l, set.m).size()});

    for (uint64_t t = 0; t < M; ++t) {
        FieldElement acc = tower.zero();
        for (auto& st : states) {
            FieldElement orbit_sum = st.running;
            FieldElement cur = st.running;
            for (unsigned r = 1; r < st.orbit; ++r) {
                cur = tower.square(cur);
                orbit_sum = tower.add(orbit_sum, cur);
            }
            acc = tower.add(acc, orbit_sum);
            st.running = tower.mul(st.running, st.step);
        }
        check(acc.bits <= 1, errc::value_not_binary,
              "power sum left GF(2); index set is not doubling-closed");
        out.set(t, acc.bits == 1);
    }
    return out;
}

bool is_ideal_autocorrelation(const BinarySequence& s) {
    check(s.period() >= 3, errc::period_mismatch, "autocorrelation test needs period >= 3");
    const auto profile = autocorrelation_profile(s);
    for (uint64_t tau = 1; tau < s.period(); ++tau)
        if (profile[tau] != -1) return false;
    return true;
}

namespace {

constexpr uint32_t kMersennePrimes[] = {7, 31, 127, 8191};

bool supported_mersenne(uint32_t p) {
    for (uint32_t q : kMersennePrimes)
        if (p == q) return true;
    return false;
}

}  // namespace

BinarySequence legendre_sequence(uint32_t p) {
    check(supported_mersenne(p), errc::not_mersenne_prime,
          "period must be one of the supported Mersenne primes 7, 31, 127, 8191");
    std::vector<bool> residue(p, false);
    for (uint64_t x = 1; x < p; ++x) residue[x * x % p] = true;
    BinarySequence s(p);
    s.set(0, true);
    for (uint32_t t = 1; t < p; ++t) s.set(t, !residue[t]);
    return s;
}

LegendreSpec LegendreSpec::make(unsigned m, int zeta, uint32_t gamma) {
    const uint64_t p64 = (static_cast<uint64_t>(1) << m) - 1;
    check(p64 <= 0xffffffffu && supported_mersenne(static_cast<uint32_t>(p64)), errc::not_mersenne_prime,
          "2^m - 1 must be one of the supported Mersenne primes");
    check(zeta == 0 || zeta == 1, errc::index_out_of_range, "zeta must be 0 or 1");
    const auto p = static_cast<uint32_t>(p64);
    if (gamma == 0) gamma = smallest_primitive_root(p);
    for (uint64_t q : prime_factors(p - 1))
        check(pow_mod_u64(gamma, (p - 1) / q, p) != 1, errc::no_unit_element,
              "gamma does not generate the residue group");
    return {p, m, gamma, zeta};
}

LegendreIndexSet legendre_index_set(const LegendreSpec& spec, const FieldTower& tower) {
    check(spec.m == tower.m(), errc::period_mismatch, "spec exponent does not match the tower");
    const uint32_t p = spec.p;
    const unsigned count = (p - 1) / (2 * spec.m);

    std::vector<uint32_t> leaders;
    std::set<uint32_t> distinct;
    for (unsigned j = 0; j < count; ++j) {
        const auto val = static_cast<uint32_t>(pow_mod_u64(spec.gamma, 2 * j + spec.zeta, p));
        const uint32_t leader = coset_of(val, spec.m).leader;
        check(distinct.insert(leader).second, errc::internal_check_failed,
              "residue powers landed in a repeated coset");
        leaders.push_back(leader);
    }
    IndexSet set = IndexSet::from_leaders(spec.m, leaders, spec.zeta);

    const BinarySequence base = base_sequence(set, tower);
    const BinarySequence legendre = legendre_sequence(p);
    auto target = [&](uint32_t t) {
        return spec.zeta == 0 ? legendre.get(t)
                              : legendre.get(static_cast<uint64_t>(spec.gamma) * t % p);
    };

    for (const auto& coset : cosets_mod(spec.m)) {
        const uint32_t d = coset.leader;
        bool match = true;
        for (uint32_t t = 0; t < p && match; ++t)
            match = base.get(static_cast<uint64_t>(d) * t % p) == target(t);
        if (match) return {std::move(set), d};
    }
    raise(errc::no_matching_beta, "no decimation reproduces the quadratic-residue bits");
}

IndexSet normalize_index_set(const IndexSet& set) {
    const auto M = static_cast<uint32_t>(set.modulus());
    const uint32_t target = (static_cast<uint32_t>(1) << (set.m - 1)) - 1;
    uint64_t best_d = 0;
    for (uint32_t i : set.members) {
        if (std::gcd(i, M) != 1) continue;
        const uint64_t d = static_cast<uint64_t>(target) * inverse_mod(i, M) % M;
        if (best_d == 0 || d < best_d) best_d = d;
    }
    check(best_d != 0, errc::no_unit_element, "index set has no element coprime to 2^m - 1");

    std::vector<uint32_t> scaled;
    scaled.reserve(set.members.size());
    for (uint32_t i : set.members)
        scaled.push_back(static_cast<uint32_t>(best_d * i % M));
    IndexSet out = IndexSet::from_members(set.m, scaled, set.zeta);
    check(out.normalized(), errc::internal_check_failed, "normalization missed its target element");
    return out;
}

}  // namespace seqspan
