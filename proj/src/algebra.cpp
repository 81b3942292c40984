#include "modisom/algebra.hpp"

#include <algorithm>

#include "modisom/kernels.hpp"

namespace modisom {

AlgebraElement::AlgebraElement(AlgebraPtr parent, FpVector coeffs)
    : parent_(std::move(parent)), coeffs_(std::move(coeffs)) {
    if (coeffs_.dim() != parent_->dim() || coeffs_.prime() != parent_->prime())
        throw dimension_mismatch("AlgebraElement: coefficient vector does not match the algebra");
}

namespace {
void require_same_parent(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.parent() != b.parent()) throw error("AlgebraElement: parent algebra mismatch");
}
} // namespace

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    require_same_parent(*this, o);
    FpVector v = coeffs_;
    v.add_scaled(o.coeffs_, 1);
    return {parent_, std::move(v)};
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    require_same_parent(*this, o);
    FpVector v = coeffs_;
    v.add_scaled(o.coeffs_, parent_->prime() - 1);
    return {parent_, std::move(v)};
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    require_same_parent(*this, o);
    return {parent_, parent_->mul_vec(coeffs_, o.coeffs_)};
}

AlgebraElement AlgebraElement::scaled(uint32_t c) const {
    FpVector v = coeffs_;
    v.scale(c);
    return {parent_, std::move(v)};
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    return parent_ == o.parent_ && coeffs_ == o.coeffs_;
}

FpScalar AlgebraElement::augmentation() const {
    return {coeffs_.coeff_sum(), parent_->prime()};
}

AlgebraElement AlgebraElement::power(uint64_t e) const {
    AlgebraElement result = parent_->one();
    AlgebraElement base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

AlgebraElement AlgebraElement::inverse() const {
    FpScalar a = augmentation();
    if (a.is_zero()) throw error("inverse: augmentation zero, not a unit");
    // x = a(1 - u) with u nilpotent; x^-1 = a^-1 (1 + u + u^2 + ...).
    uint32_t ainv = a.inverse().value;
    AlgebraElement u = parent_->one() - scaled(ainv);
    AlgebraElement acc = parent_->one();
    AlgebraElement term = u;
    uint32_t guard = 0;
    while (!term.is_zero()) {
        acc = acc + term;
        term = term * u;
        if (++guard > parent_->dim() + 1) throw error("inverse: series did not terminate");
    }
    return acc.scaled(ainv);
}

AlgebraElement AlgebraElement::conjugate_by(const AlgebraElement& u) const {
    return u.inverse() * (*this) * u;
}

AlgebraElement AlgebraElement::group_commutator(const AlgebraElement& b) const {
    return inverse() * b.inverse() * (*this) * b;
}

AlgebraPtr GroupAlgebra::over(GroupPtr g) {
    return std::shared_ptr<const GroupAlgebra>(new GroupAlgebra(std::move(g)));
}

AlgebraElement GroupAlgebra::zero() const {
    return {shared_from_this(), FpVector(prime(), dim())};
}

AlgebraElement GroupAlgebra::one() const { return embed(group_->identity()); }

AlgebraElement GroupAlgebra::embed(uint32_t element_index) const {
    if (element_index >= dim()) throw error("embed: element index out of range");
    FpVector v(prime(), dim());
    v.set(element_index, 1);
    return {shared_from_this(), std::move(v)};
}

AlgebraElement GroupAlgebra::from_coeffs(FpVector v) const {
    return {shared_from_this(), std::move(v)};
}

AlgebraElement GroupAlgebra::embed_minus_one(uint32_t element_index) const {
    FpVector v(prime(), dim());
    v.set(element_index, 1);
    v.add_at(group_->identity(), prime() - 1);
    return {shared_from_this(), std::move(v)};
}

FpVector GroupAlgebra::mul_vec(const FpVector& a, const FpVector& b) const {
    const uint32_t p = prime();
    FpVector out(p, dim());
    if (p == 2) {
        a.for_support([&](uint32_t i, uint32_t) {
            b.for_support([&](uint32_t j, uint32_t) { out.flip_bit(group_->mul(i, j)); });
        });
    } else {
        a.for_support([&](uint32_t i, uint32_t ci) {
            b.for_support([&](uint32_t j, uint32_t cj) { out.add_at(group_->mul(i, j), ci * cj); });
        });
    }
    return out;
}

FpVector GroupAlgebra::mul_basis_right(const FpVector& a, uint32_t g) const {
    FpVector out(prime(), dim());
    a.for_support([&](uint32_t i, uint32_t c) { out.add_at(group_->mul(i, g), c); });
    return out;
}

FpVector GroupAlgebra::mul_basis_left(uint32_t g, const FpVector& a) const {
    FpVector out(prime(), dim());
    a.for_support([&](uint32_t i, uint32_t c) { out.add_at(group_->mul(g, i), c); });
    return out;
}

const Ideal& GroupAlgebra::augmentation_ideal() const {
    std::call_once(aug_once_, [&] {
        EchelonSubspace space(prime(), dim());
        for (uint32_t g = 0; g < dim(); ++g) {
            if (g == group_->identity()) continue;
            space.insert(embed_minus_one(g).coeffs());
        }
        aug_ideal_ = Ideal{std::move(space), true};
    });
    return *aug_ideal_;
}

const std::vector<EchelonSubspace>& GroupAlgebra::radical_chain() const {
    std::call_once(chain_once_, [&] {
        const uint32_t p = prime();
        chain_.push_back(augmentation_ideal().space);
        // I^m = I^{m-1} * I = sum_s I^{m-1} (s-1) kG over a generating set
        // of G, since I is generated as a right ideal by the s - 1.
        while (chain_.back().dim() > 0) {
            const EchelonSubspace& prev = chain_.back();
            EchelonSubspace next(p, dim());
            std::vector<FpVector> seeds;
            for (const auto& v : prev.rows()) {
                for (uint32_t s : group_->generators()) {
                    FpVector w = mul_basis_right(v, s);
                    w.add_scaled(v, p - 1);
                    seeds.push_back(std::move(w));
                }
            }
            kernels::insert_batch(next, std::move(seeds));
            // close as a right kG-module
            std::vector<FpVector> frontier = next.rows();
            while (!frontier.empty()) {
                std::vector<FpVector> products;
                products.reserve(frontier.size() * group_->generators().size());
                for (const auto& v : frontier)
                    for (uint32_t s : group_->generators()) products.push_back(mul_basis_right(v, s));
                uint32_t before = next.dim();
                EchelonSubspace grown = next;
                kernels::insert_batch(grown, std::move(products));
                if (grown.dim() == before) break;
                // new rows only
                frontier.clear();
                for (const auto& row : grown.rows())
                    if (!next.contains(row)) frontier.push_back(row);
                next = std::move(grown);
            }
            if (next.dim() >= prev.dim())
                throw error("radical chain did not descend; group table is not a p-group algebra");
            chain_.push_back(std::move(next));
        }
    });
    return chain_;
}

const EchelonSubspace& GroupAlgebra::radical_power(uint32_t m) const {
    const auto& chain = radical_chain();
    if (m == 0) throw error("radical_power: exponent must be >= 1");
    if (m - 1 < chain.size()) return chain[m - 1];
    return chain.back(); // zero subspace
}

uint32_t GroupAlgebra::nilpotency_index() const {
    return static_cast<uint32_t>(radical_chain().size());
}

Ideal GroupAlgebra::ideal_power(const Ideal& ideal, uint32_t m) const {
    if (m < 1) throw error("ideal_power: exponent must be >= 1");
    if (ideal.space == augmentation_ideal().space) return Ideal{radical_power(m), true};
    EchelonSubspace acc = ideal.space;
    for (uint32_t k = 2; k <= m && acc.dim() > 0; ++k) acc = product_subspace(acc, ideal.space);
    return Ideal{std::move(acc), ideal.two_sided_certified};
}

EchelonSubspace GroupAlgebra::product_subspace(const EchelonSubspace& a, const EchelonSubspace& b) const {
    const size_t na = a.rows().size(), nb = b.rows().size();
    std::vector<FpVector> products(na * nb);
    kernels::for_indexed(na * nb, kernels::default_mode(), [&](uint64_t idx) {
        products[idx] = mul_vec(a.rows()[idx / nb], b.rows()[idx % nb]);
    });
    EchelonSubspace out(prime(), dim());
    kernels::insert_batch(out, std::move(products));
    return out;
}

Ideal GroupAlgebra::relative_augmentation_ideal(const Subgroup& n) const {
    if (n.parent() != group_) throw error("relative_augmentation_ideal: foreign subgroup");
    if (!n.is_normal()) throw error("relative_augmentation_ideal: subgroup is not normal");
    EchelonSubspace space(prime(), dim());
    std::vector<bool> seen(dim(), false);
    std::vector<FpVector> rows;
    for (uint32_t x = 0; x < dim(); ++x) {
        if (seen[x]) continue;
        // x is the least member of its coset
        for (uint32_t m : n.members()) {
            uint32_t y = group_->mul(x, m);
            seen[y] = true;
            if (y != x) {
                FpVector v(prime(), dim());
                v.set(y, 1);
                v.add_at(x, prime() - 1);
                rows.push_back(std::move(v));
            }
        }
    }
    kernels::insert_batch(space, std::move(rows));
    if (space.dim() != dim() - dim() / n.order())
        throw error("relative_augmentation_ideal: unexpected dimension");
    return Ideal{std::move(space), true};
}

const std::vector<std::vector<uint32_t>>& GroupAlgebra::classes() const {
    std::call_once(class_once_, [&] {
        classes_ = conjugacy_classes(group_);
        class_of_ = class_index_map(group_, classes_);
    });
    return classes_;
}

const std::vector<uint32_t>& GroupAlgebra::class_of() const {
    classes();
    return class_of_;
}

const EchelonSubspace& GroupAlgebra::commutator_subspace() const {
    std::call_once(comm_once_, [&] {
        // Spanned by x - (least member of the class of x); this equals
        // span{gh - hg} and the class-sum characterization, which the tests
        // cross-check.
        const auto& cls = classes();
        EchelonSubspace space(prime(), dim());
        std::vector<FpVector> rows;
        for (const auto& c : cls)
            for (size_t k = 1; k < c.size(); ++k) {
                FpVector v(prime(), dim());
                v.set(c[k], 1);
                v.add_at(c[0], prime() - 1);
                rows.push_back(std::move(v));
            }
        kernels::insert_batch(space, std::move(rows));
        commutator_ = std::move(space);
    });
    return *commutator_;
}

bool GroupAlgebra::class_sums_vanish(const FpVector& v) const {
    const auto& idx = class_of();
    std::vector<uint32_t> sums(classes().size(), 0);
    v.for_support([&](uint32_t i, uint32_t c) { sums[idx[i]] = (sums[idx[i]] + c) % prime(); });
    return std::all_of(sums.begin(), sums.end(), [](uint32_t s) { return s == 0; });
}

std::vector<AlgebraElement> GroupAlgebra::center_basis() const {
    std::vector<AlgebraElement> basis;
    for (const auto& c : classes()) {
        FpVector v(prime(), dim());
        for (uint32_t m : c) v.set(m, 1);
        basis.push_back(from_coeffs(std::move(v)));
    }
    return basis;
}

Ideal GroupAlgebra::two_sided_closure(const EchelonSubspace& span) const {
    EchelonSubspace space = span;
    bool grew = true;
    while (grew) {
        std::vector<FpVector> products;
        products.reserve(space.rows().size() * group_->generators().size() * 2);
        for (const auto& v : space.rows())
            for (uint32_t s : group_->generators()) {
                products.push_back(mul_basis_left(s, v));
                products.push_back(mul_basis_right(v, s));
            }
        uint32_t before = space.dim();
        kernels::insert_batch(space, std::move(products));
        grew = space.dim() > before;
    }
    return Ideal{std::move(space), true};
}

bool GroupAlgebra::certify_two_sided(const EchelonSubspace& space) const {
    for (const auto& v : space.rows())
        for (uint32_t s : group_->generators()) {
            if (!space.contains(mul_basis_left(s, v))) return false;
            if (!space.contains(mul_basis_right(v, s))) return false;
        }
    return true;
}

const std::vector<Subgroup>& GroupAlgebra::dimension_subgroups() const {
    std::call_once(dser_once_, [&] { dimension_subgroups_ = dimension_subgroups_group_side(group_); });
    return dimension_subgroups_;
}

} // namespace modisom
