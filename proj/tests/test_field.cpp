#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <seqspan/field.hpp>
#include <seqspan/numeric.hpp>

using namespace seqspan;

TEST_CASE("primitive polynomial table covers degrees 2..32") {
    auto table = prim_poly_table();
    REQUIRE(table.size() == 31);
    CHECK(table.front().degree == 2);
    CHECK(table.back().degree == 32);
    CHECK(table[0].poly == 0x7);
    CHECK(table[2].poly == 0x13);
    CHECK(table[6].poly == 0x11d);
    CHECK(table[14].poly == 0x1002d);
    CHECK(table[30].poly == 0x1000000af);
}

TEST_CASE("tower dimensions") {
    auto t32 = FieldTower::make(3, 2);
    CHECK(t32.n() == 12);
    CHECK(t32.big_order() == 4095);
    CHECK(t32.sub_order() == 7);
    CHECK(t32.lift_ratio() == 585);

    auto t22 = FieldTower::make(2, 2);
    CHECK(t22.big_order() == 255);
    CHECK(t22.sub_order() == 3);
    CHECK(t22.lift_ratio() == 85);

    auto t71 = FieldTower::make(7, 1);
    CHECK(t71.big_order() == 16383);
    CHECK(t71.sub_order() == 127);
    CHECK(t71.lift_ratio() == 129);
}

TEST_CASE("tower validation") {
    CHECK_THROWS_AS(FieldTower::make(1, 3), error);
    CHECK_THROWS_AS(FieldTower::make(17, 1), error);  // n = 34 > 32
    CHECK_NOTHROW(FieldTower::make(16, 1));           // n = 32
}

TEST_CASE("beta generates the degree-m subfield") {
    auto tw = FieldTower::make(3, 2);
    const auto beta = tw.beta();
    auto x = tw.one();
    for (unsigned j = 1; j < 7; ++j) {
        x = tw.mul(x, beta);
        CHECK(x.bits != 1);
        CHECK(tw.in_subfield(x, 3));
    }
    CHECK(tw.mul(x, beta).bits == 1);  // order exactly 2^m - 1
}

TEST_CASE("field arithmetic laws") {
    auto tw = FieldTower::make(3, 2);
    std::mt19937 rng(12);
    std::uniform_int_distribution<uint32_t> dist(0, 4094);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = tw.element(dist(rng));
        const auto b = tw.element(dist(rng));
        const auto c = tw.element(dist(rng));
        CHECK(tw.mul(a, tw.add(b, c)).bits ==
              tw.add(tw.mul(a, b), tw.mul(a, c)).bits);
        CHECK(tw.mul(a, b).bits == tw.mul(b, a).bits);
        CHECK(tw.mul(tw.mul(a, b), c).bits == tw.mul(a, tw.mul(b, c)).bits);
        if (a.bits) {
            CHECK(tw.mul(a, tw.inverse(a)).bits == 1);
            CHECK(tw.pow(a, 4095).bits == 1);  // Lagrange
        }
        CHECK(tw.pow(a, 1 << 12).bits == a.bits);  // Frobenius fixed point
    }
}

TEST_CASE("pow edge cases") {
    auto tw = FieldTower::make(3, 2);
    CHECK(tw.pow(tw.zero(), 0).bits == 1);
    CHECK(tw.pow(tw.zero(), 5).bits == 0);
    CHECK_THROWS_AS(tw.pow(tw.zero(), -1), error);
    CHECK_THROWS_AS(tw.inverse(tw.zero()), error);
    CHECK(tw.pow(tw.alpha(), -1).bits == tw.inverse(tw.alpha()).bits);
    CHECK(tw.pow(tw.alpha(), 4096).bits == tw.alpha().bits);  // exponent mod order
    CHECK_THROWS_AS(tw.element(4096), error);
}

TEST_CASE("traces: linearity, image, transitivity") {
    auto tw = FieldTower::make(3, 2);
    std::mt19937 rng(34);
    std::uniform_int_distribution<uint32_t> dist(0, 4095);
    for (int trial = 0; trial < 100; ++trial) {
        const auto x = tw.element(dist(rng));
        const auto y = tw.element(dist(rng));
        for (unsigned d : {1u, 2u, 3u, 6u}) {
            CHECK(tw.in_subfield(tw.trace_to(x, d), d));
            CHECK(tw.trace_to(tw.add(x, y), d).bits ==
                  tw.add(tw.trace_to(x, d), tw.trace_to(y, d)).bits);
        }
        // tr^12_3 = tr^6_3 after tr^12_6
        CHECK(tw.subfield_trace(tw.trace_to(x, 6), 3, 6).bits == tw.trace_to(x, 3).bits);
    }
    CHECK_THROWS_AS(tw.trace_to(tw.alpha(), 5), error);  // 5 does not divide 12
    CHECK_THROWS_AS(tw.subfield_trace(tw.alpha(), 4, 6), error);
}

TEST_CASE("trace is onto GF(2): both values occur") {
    auto tw = FieldTower::make(2, 2);
    int ones = 0;
    for (uint32_t b = 0; b < 256; ++b)
        ones += static_cast<int>(tw.trace_to(tw.element(b), 1).bits);
    CHECK(ones == 128);  // balanced
}

TEST_CASE("discrete log round trips") {
    auto tw = FieldTower::make(3, 2);
    std::mt19937 rng(56);
    std::uniform_int_distribution<uint64_t> dist(0, 4094);
    for (int trial = 0; trial < 50; ++trial) {
        const uint64_t j = dist(rng);
        CHECK(tw.discrete_log(tw.pow(tw.alpha(), static_cast<int64_t>(j))) == j);
    }
    CHECK_THROWS_AS(tw.discrete_log(tw.zero()), error);
}

TEST_CASE("discrete log above the table cutoff (baby-step giant-step)") {
    auto tw = FieldTower::make(11, 1);  // n = 22
    for (uint64_t j : {0ull, 1ull, 4094ull, 1234567ull, (1ull << 22) - 2}) {
        CHECK(tw.discrete_log(tw.pow(tw.alpha(), static_cast<int64_t>(j))) == j);
    }
}

TEST_CASE("unit quadratic: exhaustive scan over the half-degree subfield") {
    auto tw = FieldTower::make(3, 2);
    const auto g = tw.pow(tw.alpha(), 65);  // generates F_64^*
    int minus = 0, plus = 0;
    for (unsigned j = 0; j < 63; ++j) {
        const auto gamma = tw.pow(g, j);
        const auto qr = tw.solve_unit_quadratic(gamma);
        // root solves y^2 + gamma y + 1 = 0
        const auto lhs = tw.add(tw.add(tw.square(qr.root), tw.mul(gamma, qr.root)), tw.one());
        CHECK(lhs.bits == 0);
        if (qr.epsilon == -1) {
            CHECK(tw.in_subfield(qr.root, 6));
            ++minus;
        } else {
            CHECK(qr.epsilon == 1);
            CHECK(tw.pow(qr.root, 65).bits == 1);  // order-(2^mk + 1) subgroup
            ++plus;
        }
    }
    CHECK(minus == 31);
    CHECK(plus == 32);
}

TEST_CASE("unit quadratic: gamma = b + 1/b lands on the pair {b, 1/b}") {
    auto tw = FieldTower::make(3, 2);
    const auto g = tw.pow(tw.alpha(), 65);
    for (unsigned j = 1; j < 63; ++j) {
        const auto b = tw.pow(g, j);
        const auto binv = tw.inverse(b);
        const auto gamma = tw.add(b, binv);
        if (gamma.bits == 0) continue;  // b = 1/b
        const auto qr = tw.solve_unit_quadratic(gamma);
        CHECK(qr.epsilon == -1);
        const bool hits = qr.root.bits == b.bits || qr.root.bits == binv.bits;
        CHECK(hits);
    }
    CHECK_THROWS_AS(tw.solve_unit_quadratic(tw.zero()), error);
}

TEST_CASE("number theory helpers") {
    CHECK(euler_phi(63) == 36);
    CHECK(euler_phi(65) == 48);
    CHECK(euler_phi(1) == 1);
    CHECK(is_prime(8191));
    CHECK_FALSE(is_prime(2047));  // 23 * 89
    CHECK(inverse_mod(3, 7) == 5);
    CHECK_THROWS_AS(inverse_mod(3, 9), error);
    CHECK(smallest_primitive_root(7) == 3);
    CHECK(smallest_primitive_root(31) == 3);
    CHECK(smallest_primitive_root(127) == 3);

    auto f = factorize(360);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<uint64_t, unsigned>{2, 3});
    CHECK(f[1] == std::pair<uint64_t, unsigned>{3, 2});
    CHECK(f[2] == std::pair<uint64_t, unsigned>{5, 1});
}
