#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "modisom/kernels.hpp"
#include "modisom/pcpres.hpp"

namespace modisom {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

// Isomorphism invariant of a finite abelian p-group: the profile
// a_k = log_p #{ g : g^(p^k) = 1 } for k = 0, 1, ... until it reaches
// log_p |A|. Two finite abelian p-groups are isomorphic iff the profiles
// match.
struct AbelianType {
    std::vector<uint32_t> orders_profile;

    bool operator==(const AbelianType& o) const { return orders_profile == o.orders_profile; }
    bool operator!=(const AbelianType& o) const { return !(*this == o); }
    bool operator<(const AbelianType& o) const { return orders_profile < o.orders_profile; }

    // Profile of C_{p^e_1} x ... x C_{p^e_r}.
    static AbelianType of_cyclic_factors(const std::vector<uint32_t>& exps);
};

// A finite p-group with a full multiplication table. Groups are immutable
// after construction; the table is built inside the factory, before the
// object is shared. Element 0 is the identity unless stated otherwise.
class Group {
public:
    // Runs the overlap consistency tests and throws with the witness triple
    // if they fail.
    static GroupPtr from_presentation(PcPresentation pres,
                                      kernels::Mode mode = kernels::default_mode());

    // Adopts a ready multiplication table (quotients, unit groups). Checks
    // the identity/Latin-square properties; associativity is checked on
    // demand via verify_table().
    static GroupPtr from_table(uint32_t p, std::vector<uint16_t> table, uint32_t identity_index);

    uint32_t prime() const { return p_; }
    uint32_t order() const { return n_; }
    uint32_t identity() const { return identity_; }

    uint32_t mul(uint32_t a, uint32_t b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
    uint32_t inv(uint32_t a) const { return inv_[a]; }
    uint32_t pow_p(uint32_t a) const { return pow_p_[a]; }
    uint32_t power(uint32_t a, uint64_t e) const;
    uint32_t conj(uint32_t a, uint32_t b) const { return mul(mul(inv(b), a), b); } // a^b
    uint32_t comm(uint32_t a, uint32_t b) const {  // [a,b] = a^-1 b^-1 a b
        return mul(mul(inv(a), inv(b)), mul(a, b));
    }

    // Order of an element (a power of p).
    uint32_t element_order(uint32_t a) const { return order_of_[a]; }
    uint32_t exponent() const;
    // log_p of the exponent.
    uint32_t exponent_log() const;
    bool is_abelian() const;

    // Exhaustive associativity check over all triples.
    bool verify_table(kernels::Mode mode = kernels::default_mode()) const;

    bool has_presentation() const { return collector_.has_value(); }
    const Collector& collector() const { return *collector_; }
    ExpVec exponents_of(uint32_t idx) const { return collector_->element_at(idx); }

    // A generating set: the pc generators when presented, otherwise a greedy
    // small generating set.
    const std::vector<uint32_t>& generators() const { return generators_; }

private:
    Group() = default;
    void finish_setup();

    uint32_t p_ = 2;
    uint32_t n_ = 1;
    uint32_t identity_ = 0;
    std::vector<uint16_t> table_;
    std::vector<uint32_t> inv_;
    std::vector<uint32_t> pow_p_;
    std::vector<uint32_t> order_of_;
    std::vector<uint32_t> generators_;
    std::optional<Collector> collector_;
};

// A subgroup as a sorted set of element indices of its parent.
class Subgroup {
public:
    Subgroup(GroupPtr parent, std::vector<uint32_t> members);

    static Subgroup trivial(GroupPtr parent);
    static Subgroup full(GroupPtr parent);

    const GroupPtr& parent() const { return parent_; }
    const std::vector<uint32_t>& members() const { return members_; }
    uint32_t order() const { return static_cast<uint32_t>(members_.size()); }
    bool contains(uint32_t idx) const;
    bool contains_subgroup(const Subgroup& other) const;
    bool is_normal() const;
    bool is_abelian() const;

    bool operator==(const Subgroup& o) const { return members_ == o.members_; }
    bool operator!=(const Subgroup& o) const { return !(*this == o); }

private:
    GroupPtr parent_;
    std::vector<uint32_t> members_;
};

Subgroup subgroup_closure(const GroupPtr& g, const std::vector<uint32_t>& gens);
Subgroup normal_closure(const GroupPtr& g, const std::vector<uint32_t>& gens);

Subgroup center(const GroupPtr& g);
Subgroup centralizer(const GroupPtr& g, const Subgroup& u);
Subgroup centralizer_of_element(const GroupPtr& g, uint32_t x);
Subgroup derived_subgroup(const GroupPtr& g);
Subgroup derived_subgroup_of(const Subgroup& u);
Subgroup frattini(const GroupPtr& g);

// Subgroup generated by the p^n-th powers of all elements of u.
Subgroup agemo(const Subgroup& u, uint32_t n);
// Subgroup generated by the elements of u of order dividing p^n.
Subgroup omega(const Subgroup& u, uint32_t n);

// Product of subgroups as a subgroup (the generated one).
Subgroup subgroup_product(const Subgroup& a, const Subgroup& b);

// gamma_1 = G, gamma_{i+1} = [G, gamma_i], listed down to the first trivial
// term (inclusive).
std::vector<Subgroup> lower_central_series(const GroupPtr& g);
uint32_t nilpotency_class(const GroupPtr& g);

// D_1 >= D_2 >= ... >= D_n = 1 by the closed product formula
// D_m = prod_{i p^j >= m} gamma_i^{p^j}; index m is position m-1. The list
// ends at the first trivial subgroup (inclusive).
std::vector<Subgroup> dimension_subgroups_group_side(const GroupPtr& g);

// Checks the inductive formula D_m = [G, D_{m-1}] D_{ceil(m/p)}^p and the
// N-series laws [D_i,D_j] <= D_{i+j}, D_i^p <= D_{ip} for a computed chain.
bool verify_dimension_series_laws(const GroupPtr& g, const std::vector<Subgroup>& d);

// Classes sorted by least member; members sorted.
std::vector<std::vector<uint32_t>> conjugacy_classes(const GroupPtr& g);
std::vector<uint32_t> class_index_map(const GroupPtr& g,
                                      const std::vector<std::vector<uint32_t>>& classes);

AbelianType abelian_type(const Subgroup& u);
AbelianType abelian_type_quotient(const Subgroup& u, const Subgroup& v);

struct QuotientGroup {
    GroupPtr group;
    std::vector<uint32_t> coset_of; // parent element -> quotient element
    std::vector<uint32_t> rep_of;   // quotient element -> least parent representative
};

QuotientGroup quotient_group(const GroupPtr& g, const Subgroup& n);

// The subgroup u as a group in its own right (index i <-> members()[i]).
GroupPtr subgroup_as_group(const Subgroup& u);

// Section u/v as a group (v normal in u).
GroupPtr section_group(const Subgroup& u, const Subgroup& v);

// Backtracking isomorphism test on generator images. Abelian pairs are
// decided by their profiles.
bool is_isomorphic_small(const GroupPtr& a, const GroupPtr& b, uint32_t cap = caps::small_iso);

// rank -> number of conjugacy classes of maximal elementary abelian
// subgroups of that rank.
std::map<uint32_t, uint32_t> maximal_elementary_abelian_classes(const GroupPtr& g);

// Number of conjugacy classes of cyclic subgroups.
uint32_t cyclic_subgroup_class_count(const GroupPtr& g);

struct SubgroupCounts {
    uint64_t subgroups = 0;
    uint64_t subgroup_classes = 0;
    uint64_t cyclic_subgroup_classes = 0;
};

// Exhaustive subgroup enumeration; refuses groups over the cap.
SubgroupCounts count_subgroups(const GroupPtr& g, uint32_t cap = 1u << 6);

} // namespace modisom
