#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "modisom/families.hpp"
#include "modisom/group.hpp"

using namespace modisom;

namespace {

// Brute-force oracle: smallest closed subset containing the seed, by a
// fixpoint over all pairwise products.
std::set<uint32_t> oracle_closure(const Group& g, std::set<uint32_t> s) {
    s.insert(g.identity());
    bool changed = true;
    while (changed) {
        changed = false;
        std::set<uint32_t> next = s;
        for (uint32_t a : s)
            for (uint32_t b : s) next.insert(g.mul(a, b));
        if (next != s) {
            s.swap(next);
            changed = true;
        }
    }
    return s;
}

GroupPtr d8() { return build_family(FamilySpec::dihedral_group(8)); }
GroupPtr q8() { return build_family(FamilySpec::quaternion_group(8)); }

// Alternative refinement of D8 on generators (a, b, a^2) instead of
// (b, a, a^2).
GroupPtr d8_alt() {
    PcPresentation pres = PcPresentation::trivial_relations(2, 3);
    ExpVec asq(3, 0);
    asq[2] = 1;
    pres.set_power(0, asq); // a^2
    ExpVec ab(3, 0);        // b^a ... a-first chain: conj of b by a is b a^2
    ab[1] = 1;
    ab[2] = 1;
    pres.set_conj(1, 0, ab);
    return Group::from_presentation(pres);
}

GroupPtr c4xc2() {
    PcPresentation pres = PcPresentation::trivial_relations(2, 3);
    ExpVec w(3, 0);
    w[1] = 1;
    pres.set_power(0, w); // g0^2 = g1, so <g0> = C4; g2 = C2
    return Group::from_presentation(pres);
}

} // namespace

TEST_CASE("collection basics") {
    auto g = d8();
    const Collector& coll = g->collector();
    SUBCASE("empty word is the identity") { CHECK(coll.collect({}) == coll.identity()); }
    SUBCASE("b*a equals a^3*b as elements") {
        // pc generators: 0 = b, 1 = a, 2 = a^2
        ExpVec ba = coll.collect({{0, 1}, {1, 1}});
        ExpVec a3b = coll.collect({{1, 3}, {0, 1}});
        CHECK(ba == a3b);
    }
    SUBCASE("invalid generator index") { CHECK_THROWS_AS(coll.collect({{7, 1}}), error); }
}

TEST_CASE("collection is compatible with concatenation") {
    auto g = build_family(FamilySpec::semidihedral_group(32));
    const Collector& coll = g->collector();
    std::mt19937 rng(42);
    std::uniform_int_distribution<uint32_t> gen(0, coll.num_gens() - 1);
    std::uniform_int_distribution<int64_t> exp(-5, 5);
    for (int t = 0; t < 200; ++t) {
        GenWord u, v;
        for (int i = 0; i < 4; ++i) u.push_back({gen(rng), exp(rng)});
        for (int i = 0; i < 4; ++i) v.push_back({gen(rng), exp(rng)});
        GenWord uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        CHECK(coll.collect(uv) == coll.multiply(coll.collect(u), coll.collect(v)));
    }
}

TEST_CASE("mip presentations satisfy the defining relations") {
    auto G = build_family(FamilySpec::mip_pair_G(4, 3));
    auto H = build_family(FamilySpec::mip_pair_H(4, 3));
    CHECK(G->order() == 512);
    CHECK(H->order() == 512);
    {
        const Collector& c = G->collector();
        // generators: 0 = y, 1 = x, 2 = z
        ExpVec z = c.generator(2);
        CHECK(c.collect({{0, -1}, {1, -1}, {0, 1}, {1, 1}}) == z); // [y,x] = z
        ExpVec zx = c.multiply(c.multiply(c.inverse(c.generator(1)), z), c.generator(1));
        CHECK(zx == c.inverse(z)); // z^x = z^-1
        ExpVec zy = c.multiply(c.multiply(c.inverse(c.generator(0)), z), c.generator(0));
        CHECK(zy == c.inverse(z)); // z^y = z^-1
        CHECK(c.power(c.generator(1), 16) == c.identity()); // x^16 = 1
        CHECK(c.power(c.generator(1), 8) != c.identity());
        CHECK(c.power(c.generator(0), 8) == c.identity()); // y^8 = 1
        CHECK(c.power(z, 4) == c.identity());
    }
    {
        const Collector& c = H->collector();
        // generators: 0 = b, 1 = a, 2 = c
        uint32_t b = static_cast<uint32_t>(c.index_of(c.generator(0)));
        uint32_t a = static_cast<uint32_t>(c.index_of(c.generator(1)));
        uint32_t cc = static_cast<uint32_t>(c.index_of(c.generator(2)));
        CHECK(H->comm(b, a) == cc);                      // [b,a] = c
        CHECK(H->conj(cc, a) == H->inv(cc));             // c^a = c^-1
        CHECK(H->conj(cc, b) == cc);                     // c^b = c
        CHECK(H->element_order(a) == 16);
        CHECK(H->element_order(b) == 8);
        CHECK(H->element_order(cc) == 4);
    }
}

TEST_CASE("consistency checks") {
    SUBCASE("refined cyclic is consistent") {
        auto pres = family_presentation(FamilySpec::cyclic_group(3, 27));
        Collector coll(pres);
        CHECK(check_consistency(coll).consistent);
        CHECK(check_consistency(coll, true).consistent);
    }
    SUBCASE("D8 is consistent, also under the exhaustive fallback") {
        auto pres = family_presentation(FamilySpec::dihedral_group(8));
        Collector coll(pres);
        CHECK(check_consistency(coll).consistent);
        CHECK(check_consistency(coll, true).consistent);
    }
    SUBCASE("corrupting the D8 conjugation word is detected with a witness") {
        auto pres = family_presentation(FamilySpec::dihedral_group(8));
        // a^b := a^2 (not an automorphism image)
        ExpVec bad(3, 0);
        bad[2] = 1;
        pres.set_conj(1, 0, bad);
        Collector coll(pres);
        auto report = check_consistency(coll);
        CHECK_FALSE(report.consistent);
        CHECK(report.witness[0] != 0);
        CHECK_FALSE(check_consistency(coll, true).consistent);
        CHECK_THROWS_AS(Group::from_presentation(pres), error);
    }
}

TEST_CASE("multiplication table matches fresh collections") {
    auto g = build_family(FamilySpec::mip_pair_H(4, 3));
    const Collector& coll = g->collector();
    std::mt19937 rng(7);
    std::uniform_int_distribution<uint32_t> pick(0, g->order() - 1);
    for (int t = 0; t < 10000; ++t) {
        uint32_t a = pick(rng), b = pick(rng);
        CHECK(g->mul(a, b) ==
              coll.index_of(coll.multiply(coll.element_at(a), coll.element_at(b))));
    }
}

TEST_CASE("group axioms on the table") {
    for (auto spec : {FamilySpec::dihedral_group(16), FamilySpec::quaternion_group(8),
                      FamilySpec::extraspecial_group(3, 3), FamilySpec::extraspecial_group(3, 9)}) {
        auto g = build_family(spec);
        CAPTURE(spec.name());
        CHECK(g->verify_table());
        for (uint32_t x = 0; x < g->order(); ++x) {
            CHECK(g->mul(x, g->inv(x)) == g->identity());
            CHECK(g->mul(g->inv(x), x) == g->identity());
        }
    }
}

TEST_CASE("subgroup closures in D8") {
    auto g = d8();
    // 0 = b, 1 = a
    uint32_t b = static_cast<uint32_t>(g->collector().index_of(g->collector().generator(0)));
    uint32_t a = static_cast<uint32_t>(g->collector().index_of(g->collector().generator(1)));
    CHECK(subgroup_closure(g, {}).order() == 1);
    auto ca = subgroup_closure(g, {a});
    CHECK(ca.order() == 4);
    auto oracle = oracle_closure(*g, {a});
    CHECK(std::vector<uint32_t>(oracle.begin(), oracle.end()) == ca.members());
    auto nb = normal_closure(g, {b});
    CHECK(nb.order() == 4);
    // oracle: conjugates of b in all of G, then closure
    std::set<uint32_t> seed;
    for (uint32_t t = 0; t < g->order(); ++t) seed.insert(g->conj(b, t));
    auto normal_oracle = oracle_closure(*g, seed);
    CHECK(std::vector<uint32_t>(normal_oracle.begin(), normal_oracle.end()) == nb.members());
}

TEST_CASE("center, derived subgroup, centralizer") {
    auto g = d8();
    CHECK(center(g).order() == 2);
    CHECK(derived_subgroup(g).order() == 2);
    auto H = build_family(FamilySpec::mip_pair_H(4, 3));
    auto hp = derived_subgroup(H);
    CHECK(hp.order() == 4); // H' = <c>
    uint32_t c = static_cast<uint32_t>(H->collector().index_of(H->collector().generator(2)));
    CHECK(hp.contains(c));
    auto cent = centralizer(H, hp);
    CHECK(cent.order() == 256); // <c, a^2, b> is maximal
    CHECK(abelian_type(cent) == AbelianType::of_cyclic_factors({3, 3, 2})); // C8 x C8 x C4
}

TEST_CASE("conjugacy classes of D8") {
    auto g = d8();
    auto classes = conjugacy_classes(g);
    CHECK(classes.size() == 5);
    // brute-force orbit oracle
    for (const auto& cls : classes) {
        std::set<uint32_t> orbit;
        for (uint32_t t = 0; t < g->order(); ++t) orbit.insert(g->conj(cls[0], t));
        CHECK(std::vector<uint32_t>(orbit.begin(), orbit.end()) == cls);
    }
    uint64_t total = 0;
    for (const auto& cls : classes) {
        CHECK(g->order() % cls.size() == 0);
        total += cls.size();
    }
    CHECK(total == g->order());
}

TEST_CASE("abelian types") {
    CHECK(abelian_type(Subgroup::full(c4xc2())).orders_profile == std::vector<uint32_t>{0, 2, 3});
    CHECK(abelian_type(Subgroup::full(build_family(FamilySpec::cyclic_group(3, 9)))).orders_profile ==
          std::vector<uint32_t>{0, 1, 2});
    CHECK_THROWS_AS(abelian_type(Subgroup::full(d8())), error);
    // quotient type: D8 / Z(D8) is the Klein four-group
    auto g = d8();
    CHECK(abelian_type_quotient(Subgroup::full(g), center(g)) ==
          AbelianType::of_cyclic_factors({1, 1}));
}

TEST_CASE("quotient groups") {
    auto g = build_family(FamilySpec::dihedral_group(16));
    auto z = center(g);
    auto q = quotient_group(g, z);
    CHECK(q.group->order() == 8);
    CHECK(q.group->verify_table());
    CHECK(is_isomorphic_small(q.group, d8()));
    CHECK_THROWS_AS(quotient_group(g, subgroup_closure(g, {g->generators()[0]})), error);
}

TEST_CASE("agemo, omega, frattini") {
    auto g = d8();
    CHECK(frattini(g).order() == 2);
    CHECK(agemo(Subgroup::full(g), 1).order() == 2);
    CHECK(omega(Subgroup::full(g), 1).order() == 8); // reflections generate D8
    auto q = q8();
    CHECK(omega(Subgroup::full(q), 1).order() == 2); // unique involution
    auto c = build_family(FamilySpec::cyclic_group(2, 16));
    CHECK(agemo(Subgroup::full(c), 2).order() == 4);
    CHECK(omega(Subgroup::full(c), 2).order() == 4);
}

TEST_CASE("lower central series and class") {
    CHECK(nilpotency_class(d8()) == 2);
    CHECK(nilpotency_class(build_family(FamilySpec::dihedral_group(16))) == 3);
    CHECK(nilpotency_class(build_family(FamilySpec::elementary_group(2, 16))) == 1);
    CHECK(nilpotency_class(build_family(FamilySpec::mip_pair_G(4, 3))) == 3);
}

TEST_CASE("dimension subgroups, group side") {
    SUBCASE("elementary abelian: D_2 = 1") {
        auto d = dimension_subgroups_group_side(build_family(FamilySpec::elementary_group(2, 32)));
        REQUIRE(d.size() == 2);
        CHECK(d[1].order() == 1);
    }
    SUBCASE("D8: D_2 = <a^2>, D_3 = 1") {
        auto g = d8();
        auto d = dimension_subgroups_group_side(g);
        REQUIRE(d.size() == 3);
        CHECK(d[1] == center(g));
        CHECK(d[1].order() == 2);
        CHECK(d[2].order() == 1);
        CHECK(verify_dimension_series_laws(g, d));
    }
    SUBCASE("D16: the least n with D_n = 1 is 5") {
        auto g = build_family(FamilySpec::dihedral_group(16));
        auto d = dimension_subgroups_group_side(g);
        CHECK(d.size() == 5);
        CHECK(d.back().order() == 1);
        CHECK(d[3].order() == 2);
        CHECK(verify_dimension_series_laws(g, d));
    }
}

TEST_CASE("backtracking isomorphism") {
    CHECK_FALSE(is_isomorphic_small(d8(), q8()));
    CHECK(is_isomorphic_small(d8(), d8_alt()));
    CHECK_FALSE(is_isomorphic_small(c4xc2(), build_family(FamilySpec::cyclic_group(2, 8))));
    CHECK(is_isomorphic_small(build_family(FamilySpec::extraspecial_group(3, 3)),
                              build_family(FamilySpec::extraspecial_group(3, 3))));
    CHECK_FALSE(is_isomorphic_small(build_family(FamilySpec::extraspecial_group(3, 3)),
                                    build_family(FamilySpec::extraspecial_group(3, 9))));
    CHECK_THROWS_AS(is_isomorphic_small(build_family(FamilySpec::dihedral_group(16)),
                                        build_family(FamilySpec::dihedral_group(16)), 8),
                    cap_exceeded);
}

TEST_CASE("maximal elementary abelian classes") {
    CHECK(maximal_elementary_abelian_classes(build_family(FamilySpec::cyclic_group(5, 5))) ==
          std::map<uint32_t, uint32_t>{{1, 1}});
    CHECK(maximal_elementary_abelian_classes(q8()) == std::map<uint32_t, uint32_t>{{1, 1}});
    CHECK(maximal_elementary_abelian_classes(d8()) == std::map<uint32_t, uint32_t>{{2, 2}});
    CHECK(maximal_elementary_abelian_classes(build_family(FamilySpec::elementary_group(2, 64))) ==
          std::map<uint32_t, uint32_t>{{6, 1}});
}

TEST_CASE("cyclic subgroup classes") {
    CHECK(cyclic_subgroup_class_count(build_family(FamilySpec::cyclic_group(3, 3))) == 2);
    // Q8: trivial, center, and the three C4's; all normal.
    auto q = q8();
    CHECK(cyclic_subgroup_class_count(q) == 5);
    // independent oracle: partition the explicit list of cyclic subgroups by
    // conjugation with every group element
    std::set<std::vector<uint32_t>> cyclics;
    for (uint32_t x = 0; x < q->order(); ++x) {
        std::set<uint32_t> members{q->identity()};
        uint32_t y = x;
        while (!members.count(y)) {
            members.insert(y);
            y = q->mul(y, x);
        }
        cyclics.insert(std::vector<uint32_t>(members.begin(), members.end()));
    }
    std::set<std::set<std::vector<uint32_t>>> orbits;
    for (const auto& s : cyclics) {
        std::set<std::vector<uint32_t>> orbit;
        for (uint32_t t = 0; t < q->order(); ++t) {
            std::vector<uint32_t> img;
            for (uint32_t m : s) img.push_back(q->conj(m, t));
            std::sort(img.begin(), img.end());
            orbit.insert(img);
        }
        orbits.insert(orbit);
    }
    CHECK(orbits.size() == 5);
}

TEST_CASE("presentation text format") {
    SUBCASE("round trip through the parser") {
        std::istringstream in(
            "# dihedral of order 8 on pc generators b, a, a^2\n"
            "p 2\n"
            "gens 3\n"
            "pow 2: 0 0 1\n"
            "conj 2 1: 0 1 1\n");
        auto pres = parse_presentation(in);
        auto g = Group::from_presentation(pres);
        CHECK(g->order() == 8);
        CHECK(is_isomorphic_small(g, d8()));
    }
    SUBCASE("omitted lines default to trivial relations") {
        std::istringstream in("p 3\ngens 2\n");
        auto g = Group::from_presentation(parse_presentation(in));
        CHECK(g->order() == 9);
        CHECK(g->is_abelian());
    }
    SUBCASE("parse errors") {
        std::istringstream bad1("gens 2\np 3\n");
        CHECK_THROWS_AS(parse_presentation(bad1), parse_error);
        std::istringstream bad2("p 2\ngens 2\npow 1: 0 1 0\n");
        CHECK_THROWS_AS(parse_presentation(bad2), parse_error);
        std::istringstream bad3("p 2\ngens 2\nconj 1 2: 0 1\n");
        CHECK_THROWS_AS(parse_presentation(bad3), parse_error);
        std::istringstream bad4("p 2\ngens 2\npow 1: 0 7\n");
        CHECK_THROWS_AS(parse_presentation(bad4), parse_error);
    }
    SUBCASE("inconsistent presentations are rejected with a witness") {
        std::istringstream in(
            "p 2\n"
            "gens 3\n"
            "pow 2: 0 0 1\n"
            "conj 2 1: 0 0 1\n"); // a^b := a^2, no valid group
        auto pres = parse_presentation(in);
        Collector coll(pres);
        CHECK_FALSE(check_consistency(coll).consistent);
    }
}

TEST_CASE("trivial group edge cases") {
    auto g = build_family(FamilySpec::cyclic_group(2, 1));
    CHECK(g->order() == 1);
    CHECK(g->is_abelian());
    CHECK(abelian_type(Subgroup::full(g)).orders_profile == std::vector<uint32_t>{0});
    CHECK(dimension_subgroups_group_side(g).size() == 1);
    CHECK(maximal_elementary_abelian_classes(g) == std::map<uint32_t, uint32_t>{{0, 1}});
}

TEST_CASE("subgroup counts (descriptor helper)") {
    auto counts = count_subgroups(d8());
    CHECK(counts.subgroups == 10);
    CHECK(counts.subgroup_classes == 8);
    CHECK(counts.cyclic_subgroup_classes == 5);
    CHECK_THROWS_AS(count_subgroups(build_family(FamilySpec::dihedral_group(8)), 4), cap_exceeded);
}
