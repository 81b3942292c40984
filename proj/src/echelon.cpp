#include "modisom/echelon.hpp"

#include <algorithm>

namespace modisom {

FpVector EchelonSubspace::reduce(FpVector v) const {
    if (v.prime() != p_ || v.dim() != ambient_)
        throw dimension_mismatch("EchelonSubspace: vector does not match ambient space");
    for (size_t r = 0; r < rows_.size(); ++r) {
        uint32_t c = v.get(pivots_[r]);
        if (c) v.add_scaled(rows_[r], p_ - c);
    }
    return v;
}

bool EchelonSubspace::contains_subspace(const EchelonSubspace& other) const {
    for (const auto& row : other.rows_)
        if (!contains(row)) return false;
    return true;
}

bool EchelonSubspace::insert(FpVector v) {
    v = reduce(std::move(v));
    int lead = v.leading();
    if (lead < 0) return false;
    uint32_t pivot = static_cast<uint32_t>(lead);
    uint32_t c = v.get(pivot);
    if (c != 1) v.scale(FpScalar(c, p_).inverse().value);
    // Clear the new pivot column in the existing rows, then insert in
    // pivot order.
    for (size_t r = 0; r < rows_.size(); ++r) {
        uint32_t e = rows_[r].get(pivot);
        if (e) rows_[r].add_scaled(v, p_ - e);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    size_t idx = static_cast<size_t>(pos - pivots_.begin());
    pivots_.insert(pos, pivot);
    rows_.insert(rows_.begin() + static_cast<long>(idx), std::move(v));
    return true;
}

EchelonSubspace echelonize(uint32_t p, uint32_t ambient_dim, const std::vector<FpVector>& vectors) {
    EchelonSubspace s(p, ambient_dim);
    for (const auto& v : vectors) s.insert(v);
    return s;
}

EchelonSubspace subspace_sum(const EchelonSubspace& a, const EchelonSubspace& b) {
    if (a.prime() != b.prime() || a.ambient_dim() != b.ambient_dim())
        throw dimension_mismatch("subspace_sum: ambient mismatch");
    EchelonSubspace s = a;
    for (const auto& row : b.rows()) s.insert(row);
    return s;
}

EchelonSubspace subspace_intersection(const EchelonSubspace& a, const EchelonSubspace& b) {
    if (a.prime() != b.prime() || a.ambient_dim() != b.ambient_dim())
        throw dimension_mismatch("subspace_intersection: ambient mismatch");
    const uint32_t p = a.prime();
    const uint32_t n = a.ambient_dim();
    // Rows [x | x] for x in basis(A), [y | 0] for y in basis(B). After
    // elimination, rows whose left half vanished carry a basis of the
    // intersection in their right half.
    EchelonSubspace work(p, 2 * n);
    for (const auto& x : a.rows()) {
        FpVector v(p, 2 * n);
        x.for_support([&](uint32_t i, uint32_t c) {
            v.set(i, c);
            v.set(n + i, c);
        });
        work.insert(std::move(v));
    }
    for (const auto& y : b.rows()) {
        FpVector v(p, 2 * n);
        y.for_support([&](uint32_t i, uint32_t c) { v.set(i, c); });
        work.insert(std::move(v));
    }
    EchelonSubspace result(p, n);
    for (const auto& row : work.rows()) {
        if (row.leading() >= static_cast<int>(n)) {
            FpVector right(p, n);
            row.for_support([&](uint32_t i, uint32_t c) {
                if (i >= n) right.set(i - n, c);
            });
            result.insert(std::move(right));
        }
    }
    return result;
}

std::vector<FpVector> nullspace(uint32_t p, uint32_t width, const std::vector<FpVector>& rows) {
    EchelonSubspace row_space = echelonize(p, width, rows);
    std::vector<bool> is_pivot(width, false);
    for (uint32_t c : row_space.pivots()) is_pivot[c] = true;
    std::vector<FpVector> basis;
    for (uint32_t free = 0; free < width; ++free) {
        if (is_pivot[free]) continue;
        FpVector v(p, width);
        v.set(free, 1);
        // Back-substitute: pivot variable = -row[free] * free_value.
        for (size_t r = 0; r < row_space.rows().size(); ++r) {
            uint32_t c = row_space.rows()[r].get(free);
            if (c) v.set(row_space.pivots()[r], p - c);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace modisom
