#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "seqspan/errors.hpp"

namespace seqspan {

// One period of a binary sequence, packed little-endian: bit t lives in word
// t/64 at position t%64. Padding bits beyond the period stay zero.
class BinarySequence {
public:
    BinarySequence() = default;
    explicit BinarySequence(uint64_t period)
        : period_(period), words_((period + 63) / 64, 0) {}

    static BinarySequence from_bits(std::initializer_list<int> bits);

    uint64_t period() const { return period_; }

    bool get(uint64_t t) const {
        check(t < period_, errc::index_out_of_range, "bit index beyond period");
        return (words_[t >> 6] >> (t & 63)) & 1;
    }

    void set(uint64_t t, bool bit) {
        check(t < period_, errc::index_out_of_range, "bit index beyond period");
        const uint64_t mask = static_cast<uint64_t>(1) << (t & 63);
        if (bit)
            words_[t >> 6] |= mask;
        else
            words_[t >> 6] &= ~mask;
    }

    uint64_t ones_count() const;
    std::span<const uint64_t> words() const { return words_; }

    friend bool operator==(const BinarySequence&, const BinarySequence&) = default;

private:
    uint64_t period_ = 0;
    std::vector<uint64_t> words_;
};

// Header of the one-line "SEQ1" text format:
//   SEQ1 n=<n> m=<m> k=<k> u=<u> h=<h> I=<leaders-csv> period=<N>
// followed by the packed bits as lowercase hex, byte t/8 bit t%8.
struct SeqHeader {
    unsigned n = 0;
    unsigned m = 0;
    unsigned k = 0;
    uint64_t u = 0;
    uint64_t h = 0;
    std::vector<uint32_t> leaders;
    uint64_t period = 0;
};

void write_seq(std::ostream& os, const SeqHeader& header, const BinarySequence& seq);
std::pair<SeqHeader, BinarySequence> read_seq(std::istream& is);

std::string format_seq_header(const SeqHeader& header);

}  // namespace seqspan
