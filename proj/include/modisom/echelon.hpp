#pragma once

#include <vector>

#include "modisom/config.hpp"
#include "modisom/fpvec.hpp"

namespace modisom {

// An F_p-subspace in reduced row-echelon form. Rows have strictly increasing
// pivot columns, pivot entries are 1, and pivot columns are cleared in every
// other row. This makes the basis canonical: two subspaces are equal iff
// their row lists are equal.
class EchelonSubspace {
public:
    EchelonSubspace() = default;

    EchelonSubspace(uint32_t p, uint32_t ambient_dim) : p_(p), ambient_(ambient_dim) {
        if (ambient_dim > caps::ambient_dim)
            throw cap_exceeded("EchelonSubspace: ambient dimension over cap");
    }

    uint32_t prime() const { return p_; }
    uint32_t ambient_dim() const { return ambient_; }
    uint32_t dim() const { return static_cast<uint32_t>(rows_.size()); }
    const std::vector<FpVector>& rows() const { return rows_; }
    const std::vector<uint32_t>& pivots() const { return pivots_; }

    // Canonical representative of v + (this subspace): pivot coordinates
    // are cleared.
    FpVector reduce(FpVector v) const;

    bool contains(const FpVector& v) const { return reduce(v).is_zero(); }
    bool contains_subspace(const EchelonSubspace& other) const;

    // Insert the span of v; returns true if the dimension grew.
    bool insert(FpVector v);

    bool operator==(const EchelonSubspace& o) const {
        return p_ == o.p_ && ambient_ == o.ambient_ && rows_ == o.rows_;
    }
    bool operator!=(const EchelonSubspace& o) const { return !(*this == o); }

private:
    uint32_t p_ = 2;
    uint32_t ambient_ = 0;
    std::vector<FpVector> rows_;
    std::vector<uint32_t> pivots_;
};

EchelonSubspace echelonize(uint32_t p, uint32_t ambient_dim, const std::vector<FpVector>& vectors);

EchelonSubspace subspace_sum(const EchelonSubspace& a, const EchelonSubspace& b);

// Zassenhaus block elimination on [a|a] / [b|0] rows.
EchelonSubspace subspace_intersection(const EchelonSubspace& a, const EchelonSubspace& b);

// Basis of { x : M x = 0 } for the matrix whose rows are `rows` (each of
// length `width`).
std::vector<FpVector> nullspace(uint32_t p, uint32_t width, const std::vector<FpVector>& rows);

} // namespace modisom
