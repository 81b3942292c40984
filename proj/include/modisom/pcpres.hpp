#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "modisom/error.hpp"

namespace modisom {

// Normal form of a group element: exponent vector of length L with entries
// in {0, ..., p-1}. The element is g_1^{e_1} ... g_L^{e_L}; the identity is
// all zeros.
using ExpVec = std::vector<uint8_t>;

// A free word in the generators: (generator index, exponent) letters.
using GenWord = std::vector<std::pair<uint32_t, int64_t>>;

// Refined power-commutator presentation: every generator has relative order
// p. power_words[i] is the normal form of g_i^p and may only involve
// generators of index > i; conj_words[j][i] (for j > i) is the normal form
// of g_j^{g_i} = g_i^{-1} g_j g_i and may only involve generators of
// index >= j. Missing relations default to g_i^p = 1 and g_j^{g_i} = g_j.
// Indices are 0-based internally, 1-based in the text format.
struct PcPresentation {
    uint32_t p = 2;
    uint32_t num_gens = 0;
    std::vector<ExpVec> power_words;
    std::vector<std::vector<ExpVec>> conj_words;

    static PcPresentation trivial_relations(uint32_t p, uint32_t num_gens);

    void set_power(uint32_t i, ExpVec w);
    void set_conj(uint32_t j, uint32_t i, ExpVec w);

    uint64_t order() const;

    // Enforces the support restrictions and entry ranges above.
    void validate() const;
};

// Deterministic collection to normal form.
class Collector {
public:
    explicit Collector(PcPresentation pres);

    const PcPresentation& presentation() const { return pres_; }
    uint32_t prime() const { return pres_.p; }
    uint32_t num_gens() const { return pres_.num_gens; }
    uint64_t order() const { return pres_.order(); }

    ExpVec identity() const { return ExpVec(pres_.num_gens, 0); }
    ExpVec generator(uint32_t i) const;

    // Normal form of x * g_i.
    ExpVec multiply_by_gen(const ExpVec& x, uint32_t i) const;
    ExpVec multiply(const ExpVec& a, const ExpVec& b) const;
    ExpVec power(const ExpVec& a, uint64_t e) const;
    ExpVec inverse(const ExpVec& a) const;

    ExpVec collect(const GenWord& word) const;

    // Lexicographic enumeration: e_1 is the most significant digit, so the
    // identity has index 0.
    uint64_t index_of(const ExpVec& v) const;
    ExpVec element_at(uint64_t index) const;

private:
    PcPresentation pres_;
};

struct ConsistencyReport {
    bool consistent = true;
    // Failing overlap, as 1-based generator indices (unused slots are 0).
    std::array<uint32_t, 3> witness{0, 0, 0};
    std::string detail;
};

// Overlap (confluence) tests for the collector; sufficient and necessary
// for the collection product to be associative. With exhaustive_triples the
// full multiplication table is checked on all |G|^3 triples (|G| <= 2^9).
ConsistencyReport check_consistency(const Collector& c, bool exhaustive_triples = false);

PcPresentation parse_presentation(std::istream& in);
PcPresentation parse_presentation_file(const std::string& path);

} // namespace modisom
