#pragma once

#include <optional>

#include "modisom/algebra.hpp"
#include "modisom/units.hpp"

namespace modisom {

struct JenningsMonomial {
    std::vector<uint8_t> exponents; // one per layer generator
    uint32_t weight = 0;            // sum of exponent * generator weight
    FpVector vec;                   // ambient coefficients of prod (g_i - 1)^{a_i}
};

// Layer representatives of the dimension series with their weights, plus
// the full monomial basis in the fixed (weight, lex-exponent) order. The
// constructor-side assertions of jennings_basis guarantee: monomials plus
// the constant have full rank, and the weight->n tail spans I^n exactly.
struct JenningsData {
    std::vector<uint32_t> layer_gen_elements;
    std::vector<uint32_t> layer_gen_weights;
    std::vector<JenningsMonomial> monomials;
    std::vector<uint32_t> measured_layer_dims;  // dim I^n/I^{n+1}, n = 1, 2, ...
    std::vector<uint64_t> weight_generating_fn; // prod_i (1 + t^{w_i} + ... + t^{(p-1)w_i})
};

// D_m = { g : g - 1 in I^m }, computed by subspace membership; the chain
// ends at the first trivial term (inclusive).
std::vector<Subgroup> dimension_subgroups_algebra_side(const AlgebraPtr& a);

// True iff the group-side and algebra-side chains agree level by level.
bool jennings_dual_path_agrees(const AlgebraPtr& a);

JenningsData jennings_basis(const AlgebraPtr& a);

// I^[1] = I, I^[i] = [I^[i-1], I]; listed down to the zero subspace.
std::vector<EchelonSubspace> lie_power_chain(const AlgebraPtr& a);
EchelonSubspace lie_power_subspace(const AlgebraPtr& a, uint32_t i);

struct ZassenhausIdeal {
    uint32_t level = 0;
    Ideal ideal;
};

// L_n = sum_{i p^j >= n} (I^[i])^{p^j} + I^{n+1}, power spans taken over all
// elements of the subspace. Verifies L_n = (D_n - 1) + I^{n+1} before
// returning and throws verification_error on mismatch.
ZassenhausIdeal zassenhaus_ideal(const AlgebraPtr& a, uint32_t level);

struct ComplementReport {
    Ideal complement; // C with I^2/I^3 = L_2/I^3 (+) C/I^3
    uint32_t quotient_dim = 0;
    std::optional<uint64_t> unit_group_order;
    std::optional<bool> unit_group_isomorphic_to_g;
};

// The complement-of-L_2 pipeline: builds C, certifies it, forms kG/C and
// compares V(kG/C) with G when the sizes permit.
ComplementReport complement_of_l2(const AlgebraPtr& a);

struct HsIdealReport {
    Ideal ideal;
    uint32_t base_level = 0; // least n with D_n = 1
    std::vector<JenningsMonomial> accepted;
    std::vector<JenningsMonomial> rejected;
};

// Greedy Hertweck-Soriano ideal: start from I^n and sweep the candidate
// monomials (exponent sum >= 2) by decreasing weight, keeping a candidate
// whenever the generated ideal J still satisfies J cap L_k <= I^{k+1} for
// every k.
HsIdealReport hertweck_soriano_ideal(const AlgebraPtr& a);

} // namespace modisom
