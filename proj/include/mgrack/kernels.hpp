#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace mgrack::kernels {

// Exhaustive scans over dense n x n index tables. These are the hot loops of
// every axiom verifier; each has a scalar reference implementation and an
// AVX2 variant selected at runtime. Both return the lexicographically first
// violation, so results are bit-identical across implementations.

struct TripleViolation {
  std::int32_t x = -1, y = -1, z = -1;
};

enum class Isa { Scalar, Avx2 };

Isa active_isa();
bool isa_supported(Isa isa);
// Returns false (and leaves the selection unchanged) if unsupported.
bool set_isa(Isa isa);
std::string isa_name(Isa isa);

// First (x, y, z) with (x*y)*z != (x*z)*(y*z), lexicographic order.
std::optional<TripleViolation> first_self_distributivity_violation(const std::int32_t* table,
                                                                   std::int32_t n);

// First (g, h, k) with (g h) k != g (h k), lexicographic order.
std::optional<TripleViolation> first_associativity_violation(const std::int32_t* table,
                                                             std::int32_t n);

// First x with table[table[x][a]][b] != table[x][c], ascending x.
std::optional<std::int32_t> first_compose_violation(const std::int32_t* table, std::int32_t n,
                                                    std::int32_t a, std::int32_t b,
                                                    std::int32_t c);

namespace detail {
std::optional<TripleViolation> self_distributivity_scalar(const std::int32_t* table,
                                                          std::int32_t n);
std::optional<TripleViolation> associativity_scalar(const std::int32_t* table, std::int32_t n);
std::optional<std::int32_t> compose_scalar(const std::int32_t* table, std::int32_t n,
                                           std::int32_t a, std::int32_t b, std::int32_t c);
#if defined(MGRACK_HAVE_AVX2)
std::optional<TripleViolation> self_distributivity_avx2(const std::int32_t* table,
                                                        std::int32_t n);
std::optional<TripleViolation> associativity_avx2(const std::int32_t* table, std::int32_t n);
std::optional<std::int32_t> compose_avx2(const std::int32_t* table, std::int32_t n,
                                         std::int32_t a, std::int32_t b, std::int32_t c);
#endif
}  // namespace detail

}  // namespace mgrack::kernels
