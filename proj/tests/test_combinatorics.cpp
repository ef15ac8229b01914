#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include <seqspan/combinatorics.hpp>

using namespace seqspan;

TEST_CASE("nonzero cyclotomic cosets mod 7") {
    auto cosets = cosets_mod(3);
    REQUIRE(cosets.size() == 2);
    CHECK(cosets[0].leader == 1);
    CHECK(cosets[0].elements == std::vector<uint32_t>{1, 2, 4});
    CHECK(cosets[1].leader == 3);
    CHECK(cosets[1].elements == std::vector<uint32_t>{3, 6, 5});  // doubling order

    auto c6 = coset_of(6, 3);
    CHECK(c6.leader == 3);
    CHECK(c6.size() == 3);
}

TEST_CASE("cyclotomic cosets mod 15 include a short orbit") {
    auto cosets = cosets_mod(4);
    REQUIRE(cosets.size() == 4);
    CHECK(coset_of(5, 4).elements == std::vector<uint32_t>{5, 10});  // orbit size 2
    CHECK(coset_of(7, 4).size() == 4);
    uint32_t total = 0;
    for (const auto& c : cosets) total += static_cast<uint32_t>(c.size());
    CHECK(total == 14);  // every nonzero residue exactly once
}

TEST_CASE("run decomposition") {
    auto runs = run_decomposition(183);  // 10110111
    REQUIRE(runs.intervals.size() == 3);
    CHECK(runs.intervals[0].lo == 0);
    CHECK(runs.intervals[0].hi == 2);
    CHECK(runs.intervals[1].lo == 4);
    CHECK(runs.intervals[1].hi == 5);
    CHECK(runs.intervals[2].lo == 7);
    CHECK(runs.intervals[2].hi == 7);
    CHECK(runs.intervals[0].length() == 3);

    CHECK(run_decomposition(0).intervals.empty());
    auto solid = run_decomposition((uint64_t(1) << 62) - 1);
    REQUIRE(solid.intervals.size() == 1);
    CHECK(solid.intervals[0].length() == 62);

    // reassembling the intervals recovers the value
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const uint64_t x = rng() | (uint64_t(rng()) << 32);
        uint64_t back = 0;
        for (const auto& run : run_decomposition(x).intervals)
            for (uint64_t b = run.lo; b <= run.hi; ++b) back |= uint64_t(1) << b;
        CHECK(back == x);
    }
}

TEST_CASE("layered default exponent") {
    CHECK(default_u(3, 2).u == 1);
    CHECK(default_u(3, 2).gcd_value == 1);
    CHECK(default_u(2, 3).u == 5);         // 1 + 2^2
    CHECK(default_u(3, 4).u == 73);        // 1 + 2^3 + 2^6
    CHECK(default_u(7, 1).u == 1);
    CHECK(default_u(4, 4).u == 273);       // 1 + 2^4 + 2^8
    CHECK(default_u(4, 4).gcd_value == 3); // gcd(3, 15): not usable as-is
}

TEST_CASE("delta terms: hand values") {
    {
        auto t = delta_term(1, std::vector<uint32_t>{0}, 1, 3, 2);
        CHECK(t.delta == 1);
        CHECK(t.delta_prime == 1);
        CHECK(t.weight == 1);
    }
    {
        auto t = delta_term(3, std::vector<uint32_t>{1, 0}, 1, 3, 2);
        CHECK(t.delta == 10);  // 2^{3*1+0} + 2^{3*0+1}
        CHECK(t.delta_prime == 10);
        CHECK(t.weight == 2);
    }
    {
        auto t = delta_term(1, std::vector<uint32_t>{2}, 5, 2, 3);
        CHECK(t.delta == 80);        // 5 * 2^4
        CHECK(t.delta_prime == 17);  // 80 mod 63
        CHECK(t.weight == 2);
    }
}

TEST_CASE("delta weight equals (k-1) * weight(i) under the layered default") {
    std::mt19937 rng(99);
    for (auto [m, k] : {std::pair<unsigned, unsigned>{3, 2}, {2, 3}, {3, 4}, {2, 5}}) {
        const uint64_t u = default_u(m, k).u;
        const uint32_t sub = (uint32_t(1) << m) - 1;
        for (int trial = 0; trial < 50; ++trial) {
            const uint32_t i = 1 + rng() % (sub - 1);
            std::vector<uint32_t> v(bit_positions(i).size());
            for (auto& coord : v) coord = rng() % k;
            const auto term = delta_term(i, v, u, m, k);
            CHECK(term.weight == (k - 1) * bit_positions(i).size());
            CHECK(term.delta_prime < (uint64_t(1) << (m * k)) - 1);
        }
    }
}

TEST_CASE("distinct exponents across the index set (injectivity)") {
    // at (3,2), u=1, I = C_3: the 3 * 4 pairs (i, v) give pairwise distinct
    // doubled exponents 2*delta mod 2^n - 1
    std::set<uint64_t> seen;
    for (uint32_t i : {3u, 5u, 6u}) {
        const auto positions = bit_positions(i);
        std::vector<uint32_t> v(positions.size(), 0);
        do {
            const auto term = delta_term(i, v, 1, 3, 2);
            seen.insert(2 * term.delta % 4095);
        } while (next_v_tuple(v, 2));
    }
    CHECK(seen.size() == 12);
}

TEST_CASE("delta term validation") {
    const std::vector<uint32_t> v1{0};
    CHECK_THROWS_AS(delta_term(0, v1, 1, 3, 2), error);   // i = 0
    CHECK_THROWS_AS(delta_term(7, v1, 1, 3, 2), error);   // i = 2^m - 1
    CHECK_THROWS_AS(delta_term(1, v1, 0, 3, 2), error);   // u = 0
    CHECK_THROWS_AS(delta_term(1, v1, 3, 3, 2), error);   // gcd(3, 63) = 3
    CHECK_THROWS_AS(delta_term(3, v1, 1, 3, 2), error);   // v size != weight(i)
    const std::vector<uint32_t> v_bad{2};
    CHECK_THROWS_AS(delta_term(1, v_bad, 1, 3, 2), error);  // v coord >= k
}

TEST_CASE("v-tuple odometer is lexicographic and complete") {
    std::vector<uint32_t> v{0, 0};
    std::vector<std::vector<uint32_t>> seen{v};
    while (next_v_tuple(v, 2)) seen.push_back(v);
    REQUIRE(seen.size() == 4);
    CHECK(seen[0] == std::vector<uint32_t>{0, 0});
    CHECK(seen[1] == std::vector<uint32_t>{0, 1});
    CHECK(seen[2] == std::vector<uint32_t>{1, 0});
    CHECK(seen[3] == std::vector<uint32_t>{1, 1});

    std::vector<uint32_t> w{0, 0, 0};
    size_t count = 1;
    while (next_v_tuple(w, 3)) ++count;
    CHECK(count == 27);
}

TEST_CASE("bit positions") {
    CHECK(bit_positions(0).empty());
    CHECK(bit_positions(0b1011) == std::vector<uint32_t>{0, 1, 3});
}
