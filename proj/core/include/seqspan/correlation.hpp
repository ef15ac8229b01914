#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "seqspan/bitseq.hpp"

namespace seqspan {

// Periodic correlation R_{a,b}(tau) = sum_t (-1)^{a(t) + b(t + tau)} over one
// period; computed as N - 2 * HammingDistance(a, rot(b, tau)) on packed words.
int64_t cross_correlation(const BinarySequence& a, const BinarySequence& b, uint64_t tau);

// R_{s,s}(tau) for all tau in [0, N).
std::vector<int64_t> autocorrelation_profile(const BinarySequence& s);

struct CorrelationSpectrum {
    std::string family_id;
    uint64_t family_size = 0;
    uint64_t period = 0;
    std::map<int64_t, uint64_t> value_counts;  // correlation value -> triple count
    int64_t r_max = 0;                         // max |value| over counted triples

    uint64_t total_count() const;
};

// Full spectrum over ordered pairs (h, l) and all shifts, excluding the
// in-phase autocorrelations (h == l, tau == 0); total count is M^2*N - M.
CorrelationSpectrum family_spectrum(std::span<const BinarySequence> family, unsigned threads = 1,
                                    std::string family_id = {});

}  // namespace seqspan
