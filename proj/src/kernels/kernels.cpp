#include "mgrack/kernels.hpp"

#include <atomic>

namespace mgrack::kernels {

namespace detail {

std::optional<TripleViolation> self_distributivity_scalar(const std::int32_t* t,
                                                          std::int32_t n) {
  for (std::int32_t x = 0; x < n; ++x) {
    const std::int32_t* row_x = t + static_cast<std::size_t>(x) * n;
    for (std::int32_t y = 0; y < n; ++y) {
      const std::int32_t* row_xy = t + static_cast<std::size_t>(row_x[y]) * n;
      const std::int32_t* row_y = t + static_cast<std::size_t>(y) * n;
      for (std::int32_t z = 0; z < n; ++z) {
        // (x*y)*z vs (x*z)*(y*z)
        if (row_xy[z] != t[static_cast<std::size_t>(row_x[z]) * n + row_y[z]]) {
          return TripleViolation{x, y, z};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<TripleViolation> associativity_scalar(const std::int32_t* t, std::int32_t n) {
  for (std::int32_t g = 0; g < n; ++g) {
    const std::int32_t* row_g = t + static_cast<std::size_t>(g) * n;
    for (std::int32_t h = 0; h < n; ++h) {
      const std::int32_t* row_gh = t + static_cast<std::size_t>(row_g[h]) * n;
      const std::int32_t* row_h = t + static_cast<std::size_t>(h) * n;
      for (std::int32_t k = 0; k < n; ++k) {
        if (row_gh[k] != row_g[row_h[k]]) return TripleViolation{g, h, k};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::int32_t> compose_scalar(const std::int32_t* t, std::int32_t n,
                                           std::int32_t a, std::int32_t b, std::int32_t c) {
  for (std::int32_t x = 0; x < n; ++x) {
    const std::int32_t xa = t[static_cast<std::size_t>(x) * n + a];
    if (t[static_cast<std::size_t>(xa) * n + b] != t[static_cast<std::size_t>(x) * n + c]) {
      return x;
    }
  }
  return std::nullopt;
}

}  // namespace detail

namespace {

Isa pick_default_isa() {
#if defined(MGRACK_HAVE_AVX2)
  if (__builtin_cpu_supports("avx2")) return Isa::Avx2;
#endif
  return Isa::Scalar;
}

std::atomic<Isa>& isa_slot() {
  static std::atomic<Isa> slot{pick_default_isa()};
  return slot;
}

}  // namespace

Isa active_isa() { return isa_slot().load(std::memory_order_relaxed); }

bool isa_supported(Isa isa) {
  if (isa == Isa::Scalar) return true;
#if defined(MGRACK_HAVE_AVX2)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

bool set_isa(Isa isa) {
  if (!isa_supported(isa)) return false;
  isa_slot().store(isa, std::memory_order_relaxed);
  return true;
}

std::string isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

std::optional<TripleViolation> first_self_distributivity_violation(const std::int32_t* t,
                                                                   std::int32_t n) {
#if defined(MGRACK_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) return detail::self_distributivity_avx2(t, n);
#endif
  return detail::self_distributivity_scalar(t, n);
}

std::optional<TripleViolation> first_associativity_violation(const std::int32_t* t,
                                                             std::int32_t n) {
#if defined(MGRACK_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) return detail::associativity_avx2(t, n);
#endif
  return detail::associativity_scalar(t, n);
}

std::optional<std::int32_t> first_compose_violation(const std::int32_t* t, std::int32_t n,
                                                    std::int32_t a, std::int32_t b,
                                                    std::int32_t c) {
#if defined(MGRACK_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) return detail::compose_avx2(t, n, a, b, c);
#endif
  return detail::compose_scalar(t, n, a, b, c);
}

}  // namespace mgrack::kernels
