#pragma once

#include <functional>
#include <map>

#include "modisom/quotient.hpp"

namespace modisom {

// A multiplicatively closed set of normalized units, held as canonical
// coefficient vectors in deterministic BFS discovery order.
class UnitClosure {
public:
    using MulFn = std::function<FpVector(const FpVector&, const FpVector&)>;

    UnitClosure(uint32_t p, uint32_t vec_dim, MulFn mul);

    // BFS closure under right multiplication by the generators; frontier
    // products are computed per level, generators in index order. Throws
    // cap_exceeded when the member count would pass the cap.
    void close_from(const std::vector<FpVector>& generators, uint64_t cap);

    // Adopt a precomputed member list (already closed).
    void adopt(std::vector<FpVector> members);

    uint32_t prime() const { return p_; }
    uint32_t vec_dim() const { return dim_; }
    uint64_t order() const { return members_.size(); }
    const std::vector<FpVector>& members() const { return members_; }
    const std::vector<uint32_t>& generator_positions() const { return gen_positions_; }
    int index_of(const FpVector& v) const;

    // Rank of the member set over F_p.
    uint32_t span_rank() const;

    // The closure as a multiplication-table group.
    GroupPtr to_group(uint32_t order_cap = caps::group_order) const;

private:
    uint32_t p_, dim_;
    MulFn mul_;
    std::vector<FpVector> members_;
    std::vector<uint32_t> gen_positions_;
    std::map<std::vector<uint8_t>, uint32_t> index_;
};

// Closure of normalized-unit generators inside the full algebra.
UnitClosure unit_closure(const AlgebraPtr& a, const std::vector<AlgebraElement>& generators,
                         uint64_t cap = caps::unit_enum);

// Closure inside a quotient algebra (generators in quotient coordinates).
UnitClosure unit_closure(const QuotientAlgebra& q, const std::vector<FpVector>& generators,
                         uint64_t cap = caps::unit_enum);

// All p^(dim-1) elements of augmentation 1 of a quotient algebra; every one
// of them is a unit.
UnitClosure enumerate_normalized_units(const QuotientAlgebra& q, uint64_t cap = caps::unit_enum);

} // namespace modisom
