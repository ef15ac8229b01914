#include "seqspan/bitseq.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

namespace seqspan {

BinarySequence BinarySequence::from_bits(std::initializer_list<int> bits) {
    BinarySequence s(bits.size());
    uint64_t t = 0;
    for (int b : bits) {
        check(b == 0 || b == 1, errc::value_not_binary, "sequence bits must be 0 or 1");
        s.set(t++, b != 0);
    }
    return s;
}

uint64_t BinarySequence::ones_count() const {
    uint64_t c = 0;
    for (uint64_t w : words_) c += static_cast<uint64_t>(std::popcount(w));
    return c;
}

std::string format_seq_header(const SeqHeader& header) {
    std::ostringstream os;
    os << "SEQ1 n=" << header.n << " m=" << header.m << " k=" << header.k << " u=" << header.u
       << " h=" << header.h << " I=";
    for (size_t i = 0; i < header.leaders.size(); ++i) {
        if (i) os << ',';
        os << header.leaders[i];
    }
    os << " period=" << header.period;
    return os.str();
}

void write_seq(std::ostream& os, const SeqHeader& header, const BinarySequence& seq) {
    check(header.period == seq.period(), errc::period_mismatch, "header period does not match sequence");
    os << format_seq_header(header) << '\n';
    static const char* hexdigits = "0123456789abcdef";
    const auto words = seq.words();
    const uint64_t nbytes = (seq.period() + 7) / 8;
    std::string line(nbytes * 2, '0');
    for (uint64_t j = 0; j < nbytes; ++j) {
        const auto byte = static_cast<uint8_t>(words[j >> 3] >> ((j & 7) * 8));
        line[2 * j] = hexdigits[byte >> 4];
        line[2 * j + 1] = hexdigits[byte & 0xf];
    }
    os << line << '\n';
}

namespace {

uint64_t parse_u64_field(const std::string& token, const std::string& key) {
    check(token.rfind(key + "=", 0) == 0, errc::period_mismatch,
          "sequence header missing field " + key);
    const std::string value = token.substr(key.size() + 1);
    check(!value.empty() && value.find_first_not_of("0123456789,") == std::string::npos,
          errc::period_mismatch, "malformed sequence header field " + key);
    return std::stoull(value);
}

int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
}

}  // namespace

std::pair<SeqHeader, BinarySequence> read_seq(std::istream& is) {
    std::string header_line;
    check(static_cast<bool>(std::getline(is, header_line)), errc::period_mismatch,
          "missing sequence header line");
    std::istringstream hs(header_line);
    std::string magic;
    hs >> magic;
    check(magic == "SEQ1", errc::period_mismatch, "unrecognized sequence file magic");

    SeqHeader h;
    std::string tok;
    hs >> tok;
    h.n = static_cast<unsigned>(parse_u64_field(tok, "n"));
    hs >> tok;
    h.m = static_cast<unsigned>(parse_u64_field(tok, "m"));
    hs >> tok;
    h.k = static_cast<unsigned>(parse_u64_field(tok, "k"));
    hs >> tok;
    h.u = parse_u64_field(tok, "u");
    hs >> tok;
    h.h = parse_u64_field(tok, "h");
    hs >> tok;
    check(tok.rfind("I=", 0) == 0, errc::period_mismatch, "sequence header missing field I");
    {
        std::istringstream ls(tok.substr(2));
        std::string part;
        while (std::getline(ls, part, ','))
            h.leaders.push_back(static_cast<uint32_t>(std::stoull(part)));
    }
    hs >> tok;
    h.period = parse_u64_field(tok, "period");

    std::string hex_line;
    check(static_cast<bool>(std::getline(is, hex_line)), errc::period_mismatch,
          "missing sequence payload line");
    const uint64_t nbytes = (h.period + 7) / 8;
    check(hex_line.size() == nbytes * 2, errc::period_mismatch,
          "payload length does not match declared period");

    BinarySequence seq(h.period);
    for (uint64_t j = 0; j < nbytes; ++j) {
        const int hi = hex_nibble(hex_line[2 * j]);
        const int lo = hex_nibble(hex_line[2 * j + 1]);
        check(hi >= 0 && lo >= 0, errc::value_not_binary, "payload contains non-hex characters");
        const auto byte = static_cast<uint8_t>(hi << 4 | lo);
        for (unsigned b = 0; b < 8; ++b) {
            const uint64_t t = j * 8 + b;
            const bool bit = (byte >> b) & 1;
            if (t < h.period) {
                seq.set(t, bit);
            } else {
                check(!bit, errc::period_mismatch, "padding bits beyond period must be zero");
            }
        }
    }
    return {std::move(h), std::move(seq)};
}

}  // namespace seqspan
