#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "modisom/echelon.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace modisom::kernels {

// Execution mode for the data-parallel kernels. Every kernel has a plain
// serial path that computes the identical result; tests and the benchmark
// tool run both. All kernel outputs are canonical (counts, RREF bases,
// fixed-layout tables), so the mode never changes a result.
enum class Mode { serial, parallel };

Mode default_mode();
void set_default_mode(Mode m);

// Parallel loop over [0, n). The body must only write to disjoint,
// index-owned locations.
template <class F>
void for_indexed(uint64_t n, Mode mode, F&& body) {
#ifdef _OPENMP
    if (mode == Mode::parallel) {
#pragma omp parallel for schedule(dynamic, 64)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            body(static_cast<uint64_t>(i));
        return;
    }
#else
    (void)mode;
#endif
    for (uint64_t i = 0; i < n; ++i) body(i);
}

// Insert a batch of vectors into E. Parallel mode pre-reduces the batch
// against the current basis before the serial insertion pass. Returns the
// rank growth.
uint32_t insert_batch(EchelonSubspace& e, std::vector<FpVector> batch, Mode mode = default_mode());

// Fill the n x n multiplication table of an enumerated group, given the
// generator columns and, for every element j, a decomposition
// elem_j = elem_{decomp[j].first} * gen_{decomp[j].second} with
// decomp[j].first < j. Element 0 must be the identity. gen_cols is row-major
// n x num_gens; gen_index[k] is the element index of generator k.
void fill_product_table(uint32_t n, uint32_t num_gens, const std::vector<uint32_t>& gen_cols,
                        const std::vector<uint32_t>& gen_index,
                        const std::vector<std::pair<uint32_t, uint32_t>>& decomp,
                        std::vector<uint16_t>& table, Mode mode = default_mode());

// Enumerate all p^|basis| points of the span (canonical lifts) and count
// those satisfying pred.
uint64_t count_points(uint32_t p, uint32_t ambient, const std::vector<FpVector>& basis,
                      const std::function<bool(const FpVector&)>& pred, Mode mode = default_mode());

// Enumerate all p^|basis| points, apply map, return the span of the images.
EchelonSubspace span_points(uint32_t p, uint32_t ambient, const std::vector<FpVector>& basis,
                            const std::function<FpVector(const FpVector&)>& map,
                            Mode mode = default_mode());

} // namespace modisom::kernels
