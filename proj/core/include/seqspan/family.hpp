#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "seqspan/bitseq.hpp"
#include "seqspan/field.hpp"
#include "seqspan/idealseq.hpp"

namespace seqspan {

// Parameters of the 2^{mk}-sequence family
//   s_h(t) = sum_{i in I} { tr^{mk}_m[ (tr^n_{mk}(alpha^{2t})
//                                        + gamma_h * alpha^{(2^{mk}+1)t})^u ] }^i
// with gamma_0 = 0 and gamma_h = g^{h-1} for h >= 1, where g = alpha^{2^{mk}+1}
// generates the multiplicative group of F_{2^{mk}}.
struct FamilyParams {
    std::shared_ptr<const FieldTower> tower;
    IndexSet index_set;
    uint64_t u = 0;

    // custom_u empty picks the layered default_u(m, k). The exponent must
    // satisfy 1 <= u < 2^{mk} - 1 and gcd(u, 2^{mk} - 1) = 1; the index set
    // must contain a member coprime to 2^m - 1.
    static FamilyParams make(unsigned m, unsigned k, IndexSet set,
                             std::optional<uint64_t> custom_u = std::nullopt);

    unsigned m() const { return tower->m(); }
    unsigned k() const { return tower->k(); }
    unsigned n() const { return tower->n(); }
    uint64_t period() const { return tower->big_order(); }
    uint64_t family_size() const { return static_cast<uint64_t>(1) << (n() / 2); }

    FieldElement gamma(uint64_t h) const;

    // Short parameter id used in file names and report headers.
    std::string digest() const;
};

// Where the roots of y^2 + gamma_h*y + 1 live: epsilon = -1 puts the
// canonical root at alpha^{c(2^{mk}+1)} inside F_{2^{mk}}^*, epsilon = +1 at
// alpha^{c(2^{mk}-1)} inside the order-(2^{mk}+1) subgroup. c is folded into
// [0, 2^{mk-1}] using the root pair, g = gcd(c, 2^{mk}+epsilon), and
// in_F_prime marks g*(2^{m-1}+epsilon) < 2^{mk}+epsilon.
struct GammaClass {
    uint64_t h = 0;
    int epsilon = 0;
    uint64_t c = 0;
    uint64_t g = 0;
    bool in_F_prime = false;
};

GammaClass classify_gamma(const FamilyParams& params, uint64_t h);

BinarySequence generate_sequence(const FamilyParams& params, uint64_t h);
std::vector<BinarySequence> generate_family(const FamilyParams& params, unsigned threads = 1);

SeqHeader make_seq_header(const FamilyParams& params, uint64_t h);

// Ideal-autocorrelation construction over a residue-class index set: the
// h = 0 family member with I = legendre_index_set(spec) and the default u.
// For k >= 2 this requires gcd(k-1, p) = 1.
BinarySequence generate_section4_sequence(std::shared_ptr<const FieldTower> tower,
                                          const LegendreSpec& spec);

}  // namespace seqspan
