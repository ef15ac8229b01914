#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "seqspan/bitseq.hpp"
#include "seqspan/combinatorics.hpp"
#include "seqspan/field.hpp"

namespace seqspan {

// A union of cyclotomic cosets mod 2^m - 1, the exponent support of a
// power-sum sequence t -> sum_{i in I} beta^{i t}.
struct IndexSet {
    unsigned m = 0;
    std::vector<uint32_t> leaders;  // canonical coset leaders, ascending
    std::vector<uint32_t> members;  // all elements, ascending
    std::optional<int> zeta;        // residue-class half when Legendre-derived

    static IndexSet from_leaders(unsigned m, std::span<const uint32_t> leaders,
                                 std::optional<int> zeta = std::nullopt);
    static IndexSet from_members(unsigned m, std::span<const uint32_t> members,
                                 std::optional<int> zeta = std::nullopt);
    static IndexSet from_leaders(unsigned m, std::initializer_list<uint32_t> leaders,
                                 std::optional<int> zeta = std::nullopt) {
        return from_leaders(m, std::span<const uint32_t>(leaders.begin(), leaders.size()), zeta);
    }
    static IndexSet from_members(unsigned m, std::initializer_list<uint32_t> members,
                                 std::optional<int> zeta = std::nullopt) {
        return from_members(m, std::span<const uint32_t>(members.begin(), members.size()), zeta);
    }

    // Contains 2^{m-1} - 1, the standing assumption behind the span bounds.
    bool normalized() const;
    bool contains(uint32_t i) const;
    uint64_t modulus() const { return (static_cast<uint64_t>(1) << m) - 1; }
};

std::string index_set_to_json(const IndexSet& set);
IndexSet index_set_from_json(const std::string& text);

// One period of t -> sum_{i in I} beta^{i t} evaluated in the degree-m
// subfield of the tower; every sample must collapse to 0 or 1.
BinarySequence base_sequence(const IndexSet& set, const FieldTower& tower);

// Two-valued periodic autocorrelation: R(tau) = -1 for every tau != 0.
bool is_ideal_autocorrelation(const BinarySequence& s);

// Quadratic-residue sequence of Mersenne-prime period p: bit 1 at t = 0 and
// at non-residues, 0 at residues.
BinarySequence legendre_sequence(uint32_t p);

struct LegendreSpec {
    uint32_t p = 0;      // 2^m - 1, Mersenne prime
    unsigned m = 0;      // prime exponent
    uint32_t gamma = 0;  // generator of (Z/pZ)*
    int zeta = 0;        // 0 or 1: which half of the residue classes

    static LegendreSpec make(unsigned m, int zeta, uint32_t gamma = 0);  // gamma 0 = smallest root
};

struct LegendreIndexSet {
    IndexSet set;            // union of the cosets of gamma^{2j+zeta}
    uint32_t beta_exponent;  // base_sequence on beta^d reproduces the target bits
};

// Builds the residue-class index set and searches coset-leader decimations d
// for the one whose base sequence is bit-exact against the Legendre target
// (zeta = 0) or its gamma-decimation (zeta = 1).
LegendreIndexSet legendre_index_set(const LegendreSpec& spec, const FieldTower& tower);

// Smallest decimation d placing 2^{m-1} - 1 inside d*I.
IndexSet normalize_index_set(const IndexSet& set);

}  // namespace seqspan
