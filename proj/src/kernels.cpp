#include "modisom/kernels.hpp"

#include <atomic>

#include "modisom/config.hpp"

namespace modisom::kernels {

namespace {
Mode g_mode = Mode::parallel;

// Canonical lift of the point with mixed-radix digits of idx over the basis.
FpVector point_at(uint32_t p, uint32_t ambient, const std::vector<FpVector>& basis, uint64_t idx) {
    FpVector x(p, ambient);
    for (const auto& b : basis) {
        uint32_t digit = static_cast<uint32_t>(idx % p);
        idx /= p;
        if (digit) x.add_scaled(b, digit);
    }
    return x;
}

uint64_t pow_u64(uint64_t base, uint32_t e) {
    uint64_t r = 1;
    while (e--) r *= base;
    return r;
}
} // namespace

Mode default_mode() { return g_mode; }
void set_default_mode(Mode m) { g_mode = m; }

uint32_t insert_batch(EchelonSubspace& e, std::vector<FpVector> batch, Mode mode) {
    uint32_t before = e.dim();
    if (mode == Mode::parallel && batch.size() > 64) {
        // Reducing against the incoming basis is the bulk of the work and is
        // independent per vector; the survivors are few.
        for_indexed(batch.size(), mode, [&](uint64_t i) { batch[i] = e.reduce(std::move(batch[i])); });
    }
    for (auto& v : batch) e.insert(std::move(v));
    return e.dim() - before;
}

void fill_product_table(uint32_t n, uint32_t num_gens, const std::vector<uint32_t>& gen_cols,
                        const std::vector<uint32_t>& gen_index,
                        const std::vector<std::pair<uint32_t, uint32_t>>& decomp,
                        std::vector<uint16_t>& table, Mode mode) {
    table.assign(static_cast<size_t>(n) * n, 0);
    // Identity and generator columns seed the recursion; the remaining
    // columns follow row-by-row from x*(y'*g) = (x*y')*g.
    for (uint32_t i = 0; i < n; ++i) {
        table[static_cast<size_t>(i) * n + 0] = static_cast<uint16_t>(i);
        for (uint32_t k = 0; k < num_gens; ++k)
            table[static_cast<size_t>(i) * n + gen_index[k]] =
                static_cast<uint16_t>(gen_cols[static_cast<size_t>(i) * num_gens + k]);
    }
    std::vector<bool> seeded(n, false);
    seeded[0] = true;
    for (uint32_t k = 0; k < num_gens; ++k) seeded[gen_index[k]] = true;
    for_indexed(n, mode, [&](uint64_t i) {
        uint16_t* row = table.data() + i * n;
        for (uint32_t j = 1; j < n; ++j) {
            if (seeded[j]) continue;
            uint32_t prev = decomp[j].first;
            uint32_t k = decomp[j].second;
            uint32_t r = row[prev];
            row[j] = table[static_cast<size_t>(r) * n + gen_index[k]];
        }
    });
}

uint64_t count_points(uint32_t p, uint32_t ambient, const std::vector<FpVector>& basis,
                      const std::function<bool(const FpVector&)>& pred, Mode mode) {
    if (basis.size() > 24 || pow_u64(p, static_cast<uint32_t>(basis.size())) > caps::power_enum)
        throw cap_exceeded("count_points: enumeration over cap");
    uint64_t total = pow_u64(p, static_cast<uint32_t>(basis.size()));
    std::atomic<uint64_t> count{0};
    for_indexed(total, mode, [&](uint64_t idx) {
        if (pred(point_at(p, ambient, basis, idx))) count.fetch_add(1, std::memory_order_relaxed);
    });
    return count.load();
}

EchelonSubspace span_points(uint32_t p, uint32_t ambient, const std::vector<FpVector>& basis,
                            const std::function<FpVector(const FpVector&)>& map, Mode mode) {
    if (basis.size() > 24 || pow_u64(p, static_cast<uint32_t>(basis.size())) > caps::power_enum)
        throw cap_exceeded("span_points: enumeration over cap");
    uint64_t total = pow_u64(p, static_cast<uint32_t>(basis.size()));
#ifdef _OPENMP
    if (mode == Mode::parallel && total > 256) {
        std::vector<EchelonSubspace> partial;
#pragma omp parallel
        {
#pragma omp single
            partial.assign(static_cast<size_t>(omp_get_num_threads()), EchelonSubspace(p, ambient));
#pragma omp for schedule(dynamic, 256)
            for (long long idx = 0; idx < static_cast<long long>(total); ++idx) {
                auto& mine = partial[static_cast<size_t>(omp_get_thread_num())];
                mine.insert(map(point_at(p, ambient, basis, static_cast<uint64_t>(idx))));
            }
        }
        EchelonSubspace out(p, ambient);
        for (auto& part : partial)
            for (const auto& row : part.rows()) out.insert(row);
        return out;
    }
#endif
    EchelonSubspace out(p, ambient);
    for (uint64_t idx = 0; idx < total; ++idx) out.insert(map(point_at(p, ambient, basis, idx)));
    return out;
}

} // namespace modisom::kernels
