#pragma once

#include "modisom/algebra.hpp"

namespace modisom {

// F_p[G]/J for a certified two-sided ideal J. Elements are coefficient
// vectors on the transversal coordinates (the non-pivot columns of the
// ideal's echelon form); the canonical lift places those coordinates back
// and is a linear section of the projection.
class QuotientAlgebra {
public:
    QuotientAlgebra(AlgebraPtr ambient, Ideal j);

    const AlgebraPtr& ambient() const { return ambient_; }
    const Ideal& ideal() const { return ideal_; }
    uint32_t prime() const { return ambient_->prime(); }
    uint32_t dim() const { return static_cast<uint32_t>(transversal_.size()); }
    const std::vector<uint32_t>& transversal_coords() const { return transversal_; }

    FpVector project(const FpVector& ambient_vec) const;
    FpVector lift(const FpVector& quotient_vec) const;

    FpVector zero() const { return FpVector(prime(), dim()); }
    FpVector one() const;
    FpVector add(const FpVector& a, const FpVector& b) const;
    FpVector sub(const FpVector& a, const FpVector& b) const;
    FpVector mul(const FpVector& a, const FpVector& b) const;
    FpVector power(const FpVector& a, uint64_t e) const;

    // Augmentation descends to every proper quotient (a proper two-sided
    // ideal of this local algebra lies in the radical).
    FpScalar augmentation(const FpVector& quotient_vec) const;

    // Inverse of an element of nonzero augmentation.
    FpVector inverse(const FpVector& quotient_vec) const;

private:
    AlgebraPtr ambient_;
    Ideal ideal_;
    std::vector<uint32_t> transversal_;
    // structure constants, precomputed for small quotients
    std::vector<FpVector> sc_;
};

} // namespace modisom
