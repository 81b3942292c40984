#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "modisom/echelon.hpp"
#include "modisom/group.hpp"

namespace modisom {

class GroupAlgebra;
using AlgebraPtr = std::shared_ptr<const GroupAlgebra>;

// An element of F_p[G]: a dense coefficient vector indexed by the group's
// element enumeration.
class AlgebraElement {
public:
    AlgebraElement(AlgebraPtr parent, FpVector coeffs);

    const AlgebraPtr& parent() const { return parent_; }
    const FpVector& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.is_zero(); }

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement scaled(uint32_t c) const;
    bool operator==(const AlgebraElement& o) const;
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

    FpScalar augmentation() const;
    AlgebraElement power(uint64_t e) const;

    // Inverse of an element with nonzero augmentation, via the geometric
    // series of its nilpotent part.
    AlgebraElement inverse() const;

    // u^-1 * v * u
    AlgebraElement conjugate_by(const AlgebraElement& u) const;
    // [a,b] = a^-1 b^-1 a b on units
    AlgebraElement group_commutator(const AlgebraElement& b) const;

private:
    AlgebraPtr parent_;
    FpVector coeffs_;
};

// An F_p-subspace of the algebra together with a two-sidedness certificate:
// when certified, g*v and v*g stay in the space for every basis row v and
// every group generator g, which closes the space under all of kG.
struct Ideal {
    EchelonSubspace space;
    bool two_sided_certified = false;

    uint32_t dim() const { return space.dim(); }
};

// The modular group algebra F_p[G] over the group's own prime. Immutable;
// the cached structures are built once behind call_once.
class GroupAlgebra : public std::enable_shared_from_this<GroupAlgebra> {
public:
    static AlgebraPtr over(GroupPtr g);

    const GroupPtr& group() const { return group_; }
    uint32_t prime() const { return group_->prime(); }
    uint32_t dim() const { return group_->order(); }

    AlgebraElement zero() const;
    AlgebraElement one() const;
    AlgebraElement embed(uint32_t element_index) const;
    AlgebraElement from_coeffs(FpVector v) const;
    // g - 1
    AlgebraElement embed_minus_one(uint32_t element_index) const;

    // Raw vector arithmetic (the element class wraps these).
    FpVector mul_vec(const FpVector& a, const FpVector& b) const;
    FpVector mul_basis_right(const FpVector& a, uint32_t g) const; // a * g
    FpVector mul_basis_left(uint32_t g, const FpVector& a) const;  // g * a

    // span{ g - 1 }; equals the radical. Certified by construction.
    const Ideal& augmentation_ideal() const;

    // I(kG)^1, I^2, ... down to (and including) the zero subspace.
    const std::vector<EchelonSubspace>& radical_chain() const;
    // I(kG)^m as a subspace (zero for m past nilpotency).
    const EchelonSubspace& radical_power(uint32_t m) const;
    // Least m with I^m = 0.
    uint32_t nilpotency_index() const;

    // I^m for a general ideal, by iterated subspace products.
    Ideal ideal_power(const Ideal& ideal, uint32_t m) const;

    // span{ a_i * b_j } over the two bases.
    EchelonSubspace product_subspace(const EchelonSubspace& a, const EchelonSubspace& b) const;

    // Kernel of the induced map onto F_p[G/N]; requires N normal.
    Ideal relative_augmentation_ideal(const Subgroup& n) const;

    // span{ gh - hg }: vectors whose coefficient sums vanish on every
    // conjugacy class.
    const EchelonSubspace& commutator_subspace() const;
    bool class_sums_vanish(const FpVector& v) const;

    // Class sums, one per conjugacy class (the canonical center basis).
    std::vector<AlgebraElement> center_basis() const;

    // Smallest certified two-sided ideal containing the span.
    Ideal two_sided_closure(const EchelonSubspace& span) const;
    bool certify_two_sided(const EchelonSubspace& space) const;

    const std::vector<std::vector<uint32_t>>& classes() const;
    const std::vector<uint32_t>& class_of() const;

    // Group-side dimension subgroup chain (cached here for reuse by the
    // filtration machinery).
    const std::vector<Subgroup>& dimension_subgroups() const;

private:
    explicit GroupAlgebra(GroupPtr g) : group_(std::move(g)) {}

    GroupPtr group_;

    mutable std::once_flag aug_once_, chain_once_, comm_once_, class_once_, dser_once_;
    mutable std::optional<Ideal> aug_ideal_;
    mutable std::vector<EchelonSubspace> chain_;
    mutable std::optional<EchelonSubspace> commutator_;
    mutable std::vector<std::vector<uint32_t>> classes_;
    mutable std::vector<uint32_t> class_of_;
    mutable std::vector<Subgroup> dimension_subgroups_;
};

} // namespace modisom
