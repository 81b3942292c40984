#include "modisom/units.hpp"

#include "modisom/kernels.hpp"

namespace modisom {

UnitClosure::UnitClosure(uint32_t p, uint32_t vec_dim, MulFn mul)
    : p_(p), dim_(vec_dim), mul_(std::move(mul)) {}

void UnitClosure::close_from(const std::vector<FpVector>& generators, uint64_t cap) {
    members_.clear();
    index_.clear();
    gen_positions_.clear();
    std::vector<FpVector> gens;
    for (const auto& g : generators) {
        auto key = g.key_bytes();
        auto [it, fresh] = index_.emplace(std::move(key), static_cast<uint32_t>(members_.size()));
        if (fresh) {
            members_.push_back(g);
            gens.push_back(g);
        }
        gen_positions_.push_back(it->second);
    }
    size_t level_begin = 0;
    while (level_begin < members_.size()) {
        size_t level_end = members_.size();
        size_t frontier = level_end - level_begin;
        std::vector<FpVector> products(frontier * gens.size());
        kernels::for_indexed(products.size(), kernels::default_mode(), [&](uint64_t idx) {
            products[idx] = mul_(members_[level_begin + idx / gens.size()], gens[idx % gens.size()]);
        });
        for (auto& prod : products) {
            auto key = prod.key_bytes();
            auto [it, fresh] = index_.emplace(std::move(key), static_cast<uint32_t>(members_.size()));
            (void)it;
            if (fresh) {
                members_.push_back(std::move(prod));
                if (members_.size() > cap) throw cap_exceeded("unit closure exceeded its cap");
            }
        }
        level_begin = level_end;
    }
}

void UnitClosure::adopt(std::vector<FpVector> members) {
    members_ = std::move(members);
    index_.clear();
    for (uint32_t i = 0; i < members_.size(); ++i) index_.emplace(members_[i].key_bytes(), i);
}

int UnitClosure::index_of(const FpVector& v) const {
    auto it = index_.find(v.key_bytes());
    return it == index_.end() ? -1 : static_cast<int>(it->second);
}

uint32_t UnitClosure::span_rank() const {
    EchelonSubspace span(p_, dim_);
    kernels::insert_batch(span, members_);
    return span.dim();
}

GroupPtr UnitClosure::to_group(uint32_t order_cap) const {
    const uint64_t n = members_.size();
    if (n > order_cap || n > caps::group_order) throw cap_exceeded("closure too large for a table group");
    std::vector<uint16_t> table(n * n);
    int identity = -1;
    for (uint64_t i = 0; i < n; ++i)
        for (uint64_t j = 0; j < n; ++j) {
            int k = index_of(mul_(members_[i], members_[j]));
            if (k < 0) throw error("closure is not multiplicatively closed");
            table[i * n + j] = static_cast<uint16_t>(k);
        }
    for (uint64_t i = 0; i < n; ++i)
        if (table[i * n + i] == i) {
            // x*x = x forces x = 1 in a group
            identity = static_cast<int>(i);
            break;
        }
    if (identity < 0) throw error("closure has no identity");
    return Group::from_table(p_, std::move(table), static_cast<uint32_t>(identity));
}

UnitClosure unit_closure(const AlgebraPtr& a, const std::vector<AlgebraElement>& generators,
                         uint64_t cap) {
    std::vector<FpVector> gens;
    for (const auto& g : generators) {
        if (g.parent() != a) throw error("unit_closure: generator from a different algebra");
        if (g.augmentation().value != 1) throw error("unit_closure: generator is not normalized");
        gens.push_back(g.coeffs());
    }
    UnitClosure closure(a->prime(), a->dim(),
                        [a](const FpVector& x, const FpVector& y) { return a->mul_vec(x, y); });
    closure.close_from(gens, cap);
    return closure;
}

UnitClosure unit_closure(const QuotientAlgebra& q, const std::vector<FpVector>& generators,
                         uint64_t cap) {
    for (const auto& g : generators)
        if (q.augmentation(g).value != 1) throw error("unit_closure: generator is not normalized");
    UnitClosure closure(q.prime(), q.dim(),
                        [qc = q](const FpVector& x, const FpVector& y) { return qc.mul(x, y); });
    closure.close_from(generators, cap);
    return closure;
}

UnitClosure enumerate_normalized_units(const QuotientAlgebra& q, uint64_t cap) {
    const uint32_t p = q.prime();
    const uint32_t d = q.dim();
    if (d == 0) throw error("enumerate_normalized_units: zero algebra has no units");
    // kernel of the augmentation functional on quotient coordinates
    EchelonSubspace kernel(p, d);
    FpVector unit = q.one();
    for (uint32_t k = 0; k < d; ++k) {
        FpVector e(p, d);
        e.set(k, 1);
        uint32_t lam = q.augmentation(e).value;
        if (lam) e.add_scaled(unit, p - lam);
        kernel.insert(std::move(e));
    }
    if (kernel.dim() != d - 1)
        throw error("enumerate_normalized_units: augmentation kernel has unexpected dimension");
    uint64_t total = 1;
    for (uint32_t k = 0; k + 1 < d; ++k) {
        total *= p;
        if (total > cap) throw cap_exceeded("enumerate_normalized_units: unit group over cap");
    }
    std::vector<FpVector> members;
    members.reserve(total);
    for (uint64_t idx = 0; idx < total; ++idx) {
        FpVector x = unit;
        uint64_t rest = idx;
        for (const auto& b : kernel.rows()) {
            uint32_t digit = static_cast<uint32_t>(rest % p);
            rest /= p;
            if (digit) x.add_scaled(b, digit);
        }
        members.push_back(std::move(x));
    }
    UnitClosure closure(p, d, [qc = q](const FpVector& x, const FpVector& y) { return qc.mul(x, y); });
    closure.adopt(std::move(members));
    return closure;
}

} // namespace modisom
