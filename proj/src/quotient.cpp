#include "modisom/quotient.hpp"

namespace modisom {

QuotientAlgebra::QuotientAlgebra(AlgebraPtr ambient, Ideal j)
    : ambient_(std::move(ambient)), ideal_(std::move(j)) {
    if (!ideal_.two_sided_certified) throw error("QuotientAlgebra: ideal is not certified two-sided");
    if (ideal_.space.ambient_dim() != ambient_->dim() || ideal_.space.prime() != ambient_->prime())
        throw dimension_mismatch("QuotientAlgebra: ideal does not live in the ambient algebra");
    std::vector<bool> is_pivot(ambient_->dim(), false);
    for (uint32_t c : ideal_.space.pivots()) is_pivot[c] = true;
    for (uint32_t c = 0; c < ambient_->dim(); ++c)
        if (!is_pivot[c]) transversal_.push_back(c);
    if (dim() > 0 && dim() <= 64) {
        // structure constants over the compressed basis
        sc_.resize(static_cast<size_t>(dim()) * dim());
        for (uint32_t i = 0; i < dim(); ++i)
            for (uint32_t k = 0; k < dim(); ++k) {
                FpVector a(prime(), dim()), b(prime(), dim());
                a.set(i, 1);
                b.set(k, 1);
                sc_[static_cast<size_t>(i) * dim() + k] =
                    project(ambient_->mul_vec(lift(a), lift(b)));
            }
    }
}

FpVector QuotientAlgebra::project(const FpVector& ambient_vec) const {
    FpVector reduced = ideal_.space.reduce(ambient_vec);
    FpVector out(prime(), dim());
    for (uint32_t k = 0; k < dim(); ++k) out.set(k, reduced.get(transversal_[k]));
    return out;
}

FpVector QuotientAlgebra::lift(const FpVector& quotient_vec) const {
    FpVector out(prime(), ambient_->dim());
    quotient_vec.for_support([&](uint32_t k, uint32_t c) { out.set(transversal_[k], c); });
    return out;
}

FpVector QuotientAlgebra::one() const {
    return project(ambient_->one().coeffs());
}

FpVector QuotientAlgebra::add(const FpVector& a, const FpVector& b) const {
    FpVector out = a;
    out.add_scaled(b, 1);
    return out;
}

FpVector QuotientAlgebra::sub(const FpVector& a, const FpVector& b) const {
    FpVector out = a;
    out.add_scaled(b, prime() - 1);
    return out;
}

FpVector QuotientAlgebra::mul(const FpVector& a, const FpVector& b) const {
    if (!sc_.empty()) {
        FpVector out(prime(), dim());
        a.for_support([&](uint32_t i, uint32_t ci) {
            b.for_support([&](uint32_t k, uint32_t ck) {
                out.add_scaled(sc_[static_cast<size_t>(i) * dim() + k], ci * ck);
            });
        });
        return out;
    }
    return project(ambient_->mul_vec(lift(a), lift(b)));
}

FpVector QuotientAlgebra::power(const FpVector& a, uint64_t e) const {
    FpVector result = one();
    FpVector base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return result;
}

FpScalar QuotientAlgebra::augmentation(const FpVector& quotient_vec) const {
    return {lift(quotient_vec).coeff_sum(), prime()};
}

FpVector QuotientAlgebra::inverse(const FpVector& quotient_vec) const {
    FpScalar a = augmentation(quotient_vec);
    if (a.is_zero()) throw error("quotient inverse: augmentation zero, not a unit");
    uint32_t ainv = a.inverse().value;
    FpVector scaled = quotient_vec;
    scaled.scale(ainv);
    FpVector u = sub(one(), scaled);
    FpVector acc = one();
    FpVector term = u;
    uint32_t guard = 0;
    while (!term.is_zero()) {
        acc = add(acc, term);
        term = mul(term, u);
        if (++guard > dim() + 1) throw error("quotient inverse: series did not terminate");
    }
    acc.scale(ainv);
    return acc;
}

} // namespace modisom
