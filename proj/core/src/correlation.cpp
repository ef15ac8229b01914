#include "seqspan/correlation.hpp"

#include <bit>

#include "seqspan/parallel.hpp"

namespace seqspan {

namespace {

// Two periods of s bit-packed back to back, plus a guard word so 64-bit
// windows can be pulled from any bit offset.
std::vector<uint64_t> doubled_words(const BinarySequence& s) {
    const uint64_t N = s.period();
    const auto src = s.words();
    std::vector<uint64_t> buf((2 * N + 63) / 64 + 1, 0);
    for (size_t w = 0; w < src.size(); ++w) buf[w] = src[w];
    const uint64_t shift = N & 63;
    const uint64_t base = N >> 6;
    for (size_t w = 0; w < src.size(); ++w) {
        buf[base + w] |= shift ? src[w] << shift : src[w];
        if (shift) buf[base + w + 1] |= src[w] >> (64 - shift);
    }
    return buf;
}

uint64_t window64(const std::vector<uint64_t>& buf, uint64_t bitpos) {
    const uint64_t i = bitpos >> 6;
    const uint64_t s = bitpos & 63;
    return s ? (buf[i] >> s) | (buf[i + 1] << (64 - s)) : buf[i];
}

// Hamming distance between a and the tau-rotation of the doubled buffer b2.
uint64_t rotated_distance(std::span<const uint64_t> a, const std::vector<uint64_t>& b2, uint64_t tau,
                          uint64_t period) {
    const uint64_t full_words = period >> 6;
    uint64_t d = 0;
    for (uint64_t w = 0; w < full_words; ++w)
        d += static_cast<uint64_t>(std::popcount(a[w] ^ window64(b2, tau + 64 * w)));
    const uint64_t tail = period & 63;
    if (tail) {
        const uint64_t mask = (static_cast<uint64_t>(1) << tail) - 1;
        d += static_cast<uint64_t>(
            std::popcount((a[full_words] ^ window64(b2, tau + 64 * full_words)) & mask));
    }
    return d;
}

}  // namespace

int64_t cross_correlation(const BinarySequence& a, const BinarySequence& b, uint64_t tau) {
    check(a.period() == b.period(), errc::period_mismatch, "correlation needs equal periods");
    check(a.period() >= 1, errc::period_mismatch, "correlation needs a nonempty period");
    const uint64_t N = a.period();
    const auto b2 = doubled_words(b);
    const uint64_t d = rotated_distance(a.words(), b2, tau % N, N);
    return static_cast<int64_t>(N) - 2 * static_cast<int64_t>(d);
}

std::vector<int64_t> autocorrelation_profile(const BinarySequence& s) {
    check(s.period() >= 1, errc::period_mismatch, "autocorrelation needs a nonempty period");
    const uint64_t N = s.period();
    const auto s2 = doubled_words(s);
    std::vector<int64_t> out(N);
    for (uint64_t tau = 0; tau < N; ++tau)
        out[tau] = static_cast<int64_t>(N) - 2 * static_cast<int64_t>(rotated_distance(s.words(), s2, tau, N));
    return out;
}

uint64_t CorrelationSpectrum::total_count() const {
    uint64_t c = 0;
    for (const auto& [value, count] : value_counts) c += count;
    return c;
}

CorrelationSpectrum family_spectrum(std::span<const BinarySequence> family, unsigned threads,
                                    std::string family_id) {
    check(!family.empty(), errc::period_mismatch, "spectrum needs at least one sequence");
    const uint64_t N = family.front().period();
    for (const auto& s : family)
        check(s.period() == N, errc::period_mismatch, "family members must share one period");

    std::vector<std::vector<uint64_t>> doubled;
    doubled.reserve(family.size());
    for (const auto& s : family) doubled.push_back(doubled_words(s));

    // R_{l,h} over all shifts is the mirrored multiset of R_{h,l}, so only
    // ordered pairs with h <= l are scanned and off-diagonal counts doubled.
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t h = 0; h < family.size(); ++h)
        for (size_t l = h; l < family.size(); ++l) pairs.emplace_back(h, l);

    std::vector<std::map<int64_t, uint64_t>> partial(pairs.size());
    parallel_for(pairs.size(), threads, [&](size_t idx) {
        const auto [h, l] = pairs[idx];
        auto& counts = partial[idx];
        const auto a = family[h].words();
        const auto& b2 = doubled[l];
        for (uint64_t tau = (h == l) ? 1 : 0; tau < N; ++tau) {
            const int64_t r =
                static_cast<int64_t>(N) - 2 * static_cast<int64_t>(rotated_distance(a, b2, tau, N));
            ++counts[r];
        }
    });

    CorrelationSpectrum spec;
    spec.family_id = std::move(family_id);
    spec.family_size = family.size();
    spec.period = N;
    for (size_t idx = 0; idx < pairs.size(); ++idx) {
        const auto [h, l] = pairs[idx];
        const uint64_t weight = (h == l) ? 1 : 2;
        for (const auto& [value, count] : partial[idx]) spec.value_counts[value] += weight * count;
    }
    for (const auto& [value, count] : spec.value_counts)
        spec.r_max = std::max<int64_t>(spec.r_max, value < 0 ? -value : value);

    const uint64_t expected = family.size() * family.size() * N - family.size();
    check(spec.total_count() == expected, errc::internal_check_failed,
          "spectrum triple count does not match family size");
    return spec;
}

}  // namespace seqspan
