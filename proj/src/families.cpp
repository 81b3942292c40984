#include "modisom/families.hpp"

#include <sstream>

namespace modisom {

namespace {

uint32_t log_to_base(uint32_t p, uint64_t v, const char* what) {
    uint32_t k = 0;
    while (v > 1) {
        if (v % p) throw error(std::string(what) + ": order must be a power of the prime");
        v /= p;
        ++k;
    }
    return k;
}

ExpVec unit_sum(uint32_t L, const std::vector<uint32_t>& idxs) {
    ExpVec w(L, 0);
    for (uint32_t i : idxs) w[i] = 1;
    return w;
}

// Refined cyclic chain of length k over generator indices chain[0..k-1],
// chain[t] representing r^{p^t}; gives the word for r^{p^t} raised to e
// (0 <= e < p^{k-t}), i.e. the base-p digits of e along the tail of the
// chain.
ExpVec chain_power_word(uint32_t L, uint32_t p, const std::vector<uint32_t>& chain, uint32_t t,
                        uint64_t e) {
    ExpVec w(L, 0);
    for (uint32_t s = t; s < chain.size() && e; ++s) {
        w[chain[s]] = static_cast<uint8_t>(e % p);
        e /= p;
    }
    return w;
}

} // namespace

FamilySpec FamilySpec::cyclic_group(uint32_t p, uint64_t order) {
    FamilySpec s;
    s.tag = FamilyTag::cyclic;
    s.p = p;
    s.order = order;
    return s;
}

FamilySpec FamilySpec::elementary_group(uint32_t p, uint64_t order) {
    FamilySpec s;
    s.tag = FamilyTag::elementary;
    s.p = p;
    s.order = order;
    return s;
}

FamilySpec FamilySpec::dihedral_group(uint64_t order) {
    FamilySpec s;
    s.tag = FamilyTag::dihedral;
    s.p = 2;
    s.order = order;
    return s;
}

FamilySpec FamilySpec::semidihedral_group(uint64_t order) {
    FamilySpec s;
    s.tag = FamilyTag::semidihedral;
    s.p = 2;
    s.order = order;
    return s;
}

FamilySpec FamilySpec::quaternion_group(uint64_t order) {
    FamilySpec s;
    s.tag = FamilyTag::quaternion;
    s.p = 2;
    s.order = order;
    return s;
}

FamilySpec FamilySpec::extraspecial_group(uint32_t p, uint64_t exponent) {
    FamilySpec s;
    s.tag = FamilyTag::extraspecial;
    s.p = p;
    s.order = static_cast<uint64_t>(p) * p * p;
    s.exponent = exponent;
    return s;
}

FamilySpec FamilySpec::mip_pair_G(uint32_t n, uint32_t m) {
    FamilySpec s;
    s.tag = FamilyTag::mip_G;
    s.p = 2;
    s.n = n;
    s.m = m;
    s.order = uint64_t(1) << (n + m + 2);
    return s;
}

FamilySpec FamilySpec::mip_pair_H(uint32_t n, uint32_t m) {
    FamilySpec s = mip_pair_G(n, m);
    s.tag = FamilyTag::mip_H;
    return s;
}

std::string FamilySpec::name() const {
    std::ostringstream out;
    switch (tag) {
    case FamilyTag::cyclic: out << "cyclic(p=" << p << ",order=" << order << ")"; break;
    case FamilyTag::elementary: out << "elementary(p=" << p << ",order=" << order << ")"; break;
    case FamilyTag::dihedral: out << "dihedral(" << order << ")"; break;
    case FamilyTag::semidihedral: out << "semidihedral(" << order << ")"; break;
    case FamilyTag::quaternion: out << "quaternion(" << order << ")"; break;
    case FamilyTag::extraspecial: out << "extraspecial(p=" << p << ",exponent=" << exponent << ")"; break;
    case FamilyTag::mip_G: out << "mip_G(n=" << n << ",m=" << m << ")"; break;
    case FamilyTag::mip_H: out << "mip_H(n=" << n << ",m=" << m << ")"; break;
    }
    return out.str();
}

FamilyTag family_tag_from_string(const std::string& s) {
    if (s == "cyclic") return FamilyTag::cyclic;
    if (s == "elementary") return FamilyTag::elementary;
    if (s == "dihedral") return FamilyTag::dihedral;
    if (s == "semidihedral") return FamilyTag::semidihedral;
    if (s == "quaternion") return FamilyTag::quaternion;
    if (s == "extraspecial") return FamilyTag::extraspecial;
    if (s == "mip_G") return FamilyTag::mip_G;
    if (s == "mip_H") return FamilyTag::mip_H;
    throw error("unknown family '" + s + "'");
}

namespace {

PcPresentation cyclic_presentation(uint32_t p, uint64_t order) {
    uint32_t k = log_to_base(p, order, "cyclic");
    PcPresentation pres = PcPresentation::trivial_relations(p, k);
    for (uint32_t t = 0; t + 1 < k; ++t) {
        ExpVec w(k, 0);
        w[t + 1] = 1;
        pres.set_power(t, std::move(w));
    }
    return pres;
}

// Dihedral-like groups <r, s | r^{2^{k-1}}, s^2 = s2, r^s = r^e> on the
// refined chain s, r, r^2, r^4, ..., r^{2^{k-2}}. The reflection comes
// first so that the enumeration-order Jennings layer representatives are
// (r, s).
PcPresentation two_max_class_presentation(uint64_t order, uint32_t min_order, bool s_squares_central,
                                          bool semidihedral_twist, const char* what) {
    uint32_t k = log_to_base(2, order, what);
    if (order < min_order) throw error(std::string(what) + ": order too small");
    PcPresentation pres = PcPresentation::trivial_relations(2, k);
    const uint32_t L = k;
    // chain[t] = index of r^{2^t}
    std::vector<uint32_t> chain(k - 1);
    for (uint32_t t = 0; t < k - 1; ++t) chain[t] = t + 1;
    for (uint32_t t = 0; t + 1 < k - 1; ++t) {
        ExpVec w(L, 0);
        w[chain[t + 1]] = 1;
        pres.set_power(chain[t], std::move(w));
    }
    if (s_squares_central) {
        ExpVec w(L, 0);
        w[chain[k - 2]] = 1; // s^2 = r^{2^{k-2}}
        pres.set_power(0, std::move(w));
    }
    // r^{2^t} conjugated by s.
    for (uint32_t t = 0; t < k - 1; ++t) {
        uint64_t half = uint64_t(1) << (k - 1 - t); // order of r^{2^t}
        uint64_t e;
        if (semidihedral_twist && t == 0)
            e = (uint64_t(1) << (k - 2)) - 1; // r^s = r^{2^{k-2}-1}
        else
            e = half - 1; // inversion
        pres.set_conj(chain[t], 0, chain_power_word(L, 2, chain, t, e));
    }
    return pres;
}

PcPresentation extraspecial_presentation(uint32_t p, uint64_t exponent) {
    if (p < 3) throw error("extraspecial: p must be odd");
    PcPresentation pres = PcPresentation::trivial_relations(p, 3);
    if (exponent == p) {
        // Heisenberg group: x, y, z with y^x = yz, z central.
        pres.set_conj(1, 0, unit_sum(3, {1, 2}));
    } else if (exponent == static_cast<uint64_t>(p) * p) {
        // <a, b | a^{p^2} = b^p = 1, a^b = a^{1+p}> on gens b, a, a^p.
        ExpVec w(3, 0);
        w[2] = 1;
        pres.set_power(1, std::move(w));
        pres.set_conj(1, 0, unit_sum(3, {1, 2}));
    } else {
        throw error("extraspecial: exponent must be p or p^2");
    }
    return pres;
}

// The order-2^{n+m+2} pair. Generators for G are x, y, z with z = [y,x],
// x^{2^n} = y^{2^m} = z^4 = 1 and z inverted by both x and y; H differs in
// that c = [b,a] commutes with b. Refined chain: y, x, z, x^2, y^2, z^2,
// then the higher x- and y-powers interleaved.
PcPresentation mip_presentation(uint32_t n, uint32_t m, bool second_conj_inverts) {
    if (!(n > m && m > 2)) throw error("mip family: requires n > m > 2");
    const uint32_t L = n + m + 2;
    std::vector<uint32_t> xchain(n), ychain(m), zchain(2);
    ychain[0] = 0;
    xchain[0] = 1;
    zchain[0] = 2;
    uint32_t pos = 3;
    xchain[1] = pos++;
    ychain[1] = pos++;
    zchain[1] = pos++;
    for (uint32_t k = 2; k < std::max(n, m); ++k) {
        if (k < n) xchain[k] = pos++;
        if (k < m) ychain[k] = pos++;
    }
    PcPresentation pres = PcPresentation::trivial_relations(2, L);
    for (uint32_t t = 0; t + 1 < n; ++t) {
        ExpVec w(L, 0);
        w[xchain[t + 1]] = 1;
        pres.set_power(xchain[t], std::move(w));
    }
    for (uint32_t t = 0; t + 1 < m; ++t) {
        ExpVec w(L, 0);
        w[ychain[t + 1]] = 1;
        pres.set_power(ychain[t], std::move(w));
    }
    {
        ExpVec w(L, 0);
        w[zchain[1]] = 1;
        pres.set_power(zchain[0], std::move(w));
    }
    // x^y = x z^{-1} = x z z^2
    pres.set_conj(xchain[0], ychain[0], unit_sum(L, {xchain[0], zchain[0], zchain[1]}));
    // z^x = z^{-1}
    pres.set_conj(zchain[0], xchain[0], unit_sum(L, {zchain[0], zchain[1]}));
    if (second_conj_inverts) {
        // z^y = z^{-1}; both squares are then central.
        pres.set_conj(zchain[0], ychain[0], unit_sum(L, {zchain[0], zchain[1]}));
    } else {
        // z commutes with y, so [x, y^2] = z^{-2} and y^2 is not central:
        // (y^2)^x = y^2 z^2. (y^2 z is, matching the H family.)
        pres.set_conj(ychain[1], xchain[0], unit_sum(L, {ychain[1], zchain[1]}));
    }
    return pres;
}

} // namespace

PcPresentation family_presentation(const FamilySpec& spec) {
    switch (spec.tag) {
    case FamilyTag::cyclic:
        return cyclic_presentation(spec.p, spec.order);
    case FamilyTag::elementary:
        return PcPresentation::trivial_relations(spec.p, log_to_base(spec.p, spec.order, "elementary"));
    case FamilyTag::dihedral:
        return two_max_class_presentation(spec.order, 8, false, false, "dihedral");
    case FamilyTag::semidihedral:
        return two_max_class_presentation(spec.order, 16, false, true, "semidihedral");
    case FamilyTag::quaternion:
        return two_max_class_presentation(spec.order, 8, true, false, "quaternion");
    case FamilyTag::extraspecial:
        return extraspecial_presentation(spec.p, spec.exponent);
    case FamilyTag::mip_G:
        return mip_presentation(spec.n, spec.m, true);
    case FamilyTag::mip_H:
        return mip_presentation(spec.n, spec.m, false);
    }
    throw error("family_presentation: bad tag");
}

GroupPtr build_family(const FamilySpec& spec) { return Group::from_presentation(family_presentation(spec)); }

std::vector<FamilySpec> acceptance_corpus() {
    std::vector<FamilySpec> corpus;
    for (uint64_t o = 2; o <= 64; o *= 2) corpus.push_back(FamilySpec::cyclic_group(2, o));
    for (uint64_t o = 4; o <= 64; o *= 2) corpus.push_back(FamilySpec::elementary_group(2, o));
    for (uint64_t o = 8; o <= 64; o *= 2) corpus.push_back(FamilySpec::dihedral_group(o));
    for (uint64_t o = 16; o <= 64; o *= 2) corpus.push_back(FamilySpec::semidihedral_group(o));
    for (uint64_t o = 8; o <= 64; o *= 2) corpus.push_back(FamilySpec::quaternion_group(o));
    corpus.push_back(FamilySpec::cyclic_group(3, 3));
    corpus.push_back(FamilySpec::cyclic_group(3, 9));
    corpus.push_back(FamilySpec::extraspecial_group(3, 3));
    corpus.push_back(FamilySpec::extraspecial_group(3, 9));
    return corpus;
}

} // namespace modisom
