#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include <seqspan/bitseq.hpp>

using namespace seqspan;

TEST_CASE("bit access and counting") {
    BinarySequence s(70);
    CHECK(s.period() == 70);
    CHECK(s.ones_count() == 0);
    s.set(0, true);
    s.set(63, true);
    s.set(64, true);  // crosses the word boundary
    CHECK(s.get(0));
    CHECK(s.get(63));
    CHECK(s.get(64));
    CHECK_FALSE(s.get(1));
    CHECK(s.ones_count() == 3);
    s.set(63, false);
    CHECK(s.ones_count() == 2);

    CHECK_THROWS_AS(s.get(70), error);
    CHECK_THROWS_AS(s.set(70, true), error);
}

TEST_CASE("from_bits and equality") {
    auto s = BinarySequence::from_bits({1, 0, 1, 1, 0, 0, 0, 0});
    CHECK(s.period() == 8);
    CHECK(s.get(0));
    CHECK_FALSE(s.get(1));
    CHECK(s.get(3));
    CHECK(s == BinarySequence::from_bits({1, 0, 1, 1, 0, 0, 0, 0}));
    CHECK_FALSE(s == BinarySequence::from_bits({1, 0, 1, 1, 0, 0, 0, 1}));
}

TEST_CASE("header line layout") {
    SeqHeader hdr{12, 3, 2, 1, 7, {3}, 4095};
    CHECK(format_seq_header(hdr) == "SEQ1 n=12 m=3 k=2 u=1 h=7 I=3 period=4095");
    SeqHeader multi{12, 3, 2, 5, 0, {1, 3}, 4095};
    CHECK(format_seq_header(multi) == "SEQ1 n=12 m=3 k=2 u=5 h=0 I=1,3 period=4095");
}

TEST_CASE("hex payload is byte t/8, bit t%8") {
    auto s = BinarySequence::from_bits({1, 0, 1, 1, 0, 0, 0, 0,   // 0x0d
                                        1, 1, 1, 1, 0, 0, 0, 1}); // 0x8f
    SeqHeader hdr{4, 2, 1, 1, 0, {1}, 16};
    std::ostringstream os;
    write_seq(os, hdr, s);
    CHECK(os.str() == "SEQ1 n=4 m=2 k=1 u=1 h=0 I=1 period=16\n0d8f\n");
}

TEST_CASE("round trip with a ragged period") {
    std::mt19937 rng(2024);
    BinarySequence s(101);  // not a multiple of 8: padding bits in the last byte
    for (uint64_t t = 0; t < 101; ++t) s.set(t, rng() & 1);
    SeqHeader hdr{12, 3, 2, 1, 9, {1, 3}, 101};

    std::stringstream io;
    write_seq(io, hdr, s);
    auto [back_hdr, back] = read_seq(io);
    CHECK(back == s);
    CHECK(back_hdr.n == 12);
    CHECK(back_hdr.m == 3);
    CHECK(back_hdr.k == 2);
    CHECK(back_hdr.u == 1);
    CHECK(back_hdr.h == 9);
    CHECK(back_hdr.leaders == std::vector<uint32_t>{1, 3});
    CHECK(back_hdr.period == 101);
}

TEST_CASE("parser rejects malformed input") {
    auto parse = [](const std::string& text) {
        std::istringstream is(text);
        return read_seq(is);
    };
    CHECK_THROWS_AS(parse("SEQ2 n=4 m=2 k=1 u=1 h=0 I=1 period=8\nff\n"), error);
    CHECK_THROWS_AS(parse("SEQ1 n=4 m=2 k=1 u=1 h=0 period=8\nff\n"), error);    // missing I=
    CHECK_THROWS_AS(parse("SEQ1 n=4 m=2 k=1 u=1 h=0 I=1 period=8\nfg\n"), error); // non-hex
    CHECK_THROWS_AS(parse("SEQ1 n=4 m=2 k=1 u=1 h=0 I=1 period=8\nff00\n"), error); // too long
    CHECK_THROWS_AS(parse("SEQ1 n=4 m=2 k=1 u=1 h=0 I=1 period=16\nff\n"), error);  // too short
    CHECK_THROWS_AS(parse("SEQ1 n=4 m=2 k=1 u=1 h=0 I=1 period=4\nff\n"), error);   // padding set
    CHECK_NOTHROW(parse("SEQ1 n=4 m=2 k=1 u=1 h=0 I=1 period=4\n0f\n"));
}
