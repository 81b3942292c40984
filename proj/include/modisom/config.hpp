#pragma once

#include <cstdint>

namespace modisom {

// Default size caps. Everything here is a refusal threshold, not a tuning
// knob: operations throw cap_exceeded instead of degrading.
namespace caps {

// Largest ambient dimension for vectors/subspaces.
inline constexpr uint32_t ambient_dim = 4096;

// Largest group order for full enumeration + multiplication table.
inline constexpr uint32_t group_order = 1u << 10;

// Largest order for backtracking isomorphism search.
inline constexpr uint32_t small_iso = 1u << 7;

// Largest unit-group/closure enumeration.
inline constexpr uint64_t unit_enum = 1u << 16;

// Largest exhaustive coset enumeration (kernel sizes, power spans).
inline constexpr uint64_t power_enum = 1u << 20;

} // namespace caps

} // namespace modisom
