// AVX2 variants of the table-scan kernels. Same results as the scalar
// reference, including the lexicographic first-violation order: blocks are
// scanned in ascending index order and the lowest failing lane wins.

#include "mgrack/kernels.hpp"

#if defined(MGRACK_HAVE_AVX2)

#include <immintrin.h>

namespace mgrack::kernels::detail {

namespace {

constexpr std::int32_t kLanes = 8;

inline int first_bad_lane(__m256i lhs, __m256i rhs) {
  const __m256i eq = _mm256_cmpeq_epi32(lhs, rhs);
  const int mask = _mm256_movemask_ps(_mm256_castsi256_ps(eq));
  if (mask == 0xff) return -1;
  return __builtin_ctz(~mask & 0xff);
}

}  // namespace

std::optional<TripleViolation> self_distributivity_avx2(const std::int32_t* t,
                                                        std::int32_t n) {
  const __m256i vn = _mm256_set1_epi32(n);
  for (std::int32_t x = 0; x < n; ++x) {
    const std::int32_t* row_x = t + static_cast<std::size_t>(x) * n;
    for (std::int32_t y = 0; y < n; ++y) {
      const std::int32_t* row_xy = t + static_cast<std::size_t>(row_x[y]) * n;
      const std::int32_t* row_y = t + static_cast<std::size_t>(y) * n;
      std::int32_t z = 0;
      for (; z + kLanes <= n; z += kLanes) {
        const __m256i lhs = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row_xy + z));
        const __m256i xz = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row_x + z));
        const __m256i yz = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row_y + z));
        const __m256i idx = _mm256_add_epi32(_mm256_mullo_epi32(xz, vn), yz);
        const __m256i rhs = _mm256_i32gather_epi32(t, idx, 4);
        const int lane = first_bad_lane(lhs, rhs);
        if (lane >= 0) return TripleViolation{x, y, z + lane};
      }
      for (; z < n; ++z) {
        if (row_xy[z] != t[static_cast<std::size_t>(row_x[z]) * n + row_y[z]]) {
          return TripleViolation{x, y, z};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<TripleViolation> associativity_avx2(const std::int32_t* t, std::int32_t n) {
  for (std::int32_t g = 0; g < n; ++g) {
    const std::int32_t* row_g = t + static_cast<std::size_t>(g) * n;
    for (std::int32_t h = 0; h < n; ++h) {
      const std::int32_t* row_gh = t + static_cast<std::size_t>(row_g[h]) * n;
      const std::int32_t* row_h = t + static_cast<std::size_t>(h) * n;
      std::int32_t k = 0;
      for (; k + kLanes <= n; k += kLanes) {
        const __m256i lhs = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row_gh + k));
        const __m256i hk = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row_h + k));
        const __m256i rhs = _mm256_i32gather_epi32(row_g, hk, 4);
        const int lane = first_bad_lane(lhs, rhs);
        if (lane >= 0) return TripleViolation{g, h, k + lane};
      }
      for (; k < n; ++k) {
        if (row_gh[k] != row_g[row_h[k]]) return TripleViolation{g, h, k};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::int32_t> compose_avx2(const std::int32_t* t, std::int32_t n,
                                         std::int32_t a, std::int32_t b, std::int32_t c) {
  const __m256i vn = _mm256_set1_epi32(n);
  const __m256i vb = _mm256_set1_epi32(b);
  const __m256i step = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  std::int32_t x = 0;
  for (; x + kLanes <= n; x += kLanes) {
    const __m256i xs = _mm256_add_epi32(_mm256_set1_epi32(x), step);
    const __m256i row = _mm256_mullo_epi32(xs, vn);
    const __m256i xa =
        _mm256_i32gather_epi32(t, _mm256_add_epi32(row, _mm256_set1_epi32(a)), 4);
    const __m256i lhs = _mm256_i32gather_epi32(
        t, _mm256_add_epi32(_mm256_mullo_epi32(xa, vn), vb), 4);
    const __m256i rhs =
        _mm256_i32gather_epi32(t, _mm256_add_epi32(row, _mm256_set1_epi32(c)), 4);
    const int lane = first_bad_lane(lhs, rhs);
    if (lane >= 0) return x + lane;
  }
  for (; x < n; ++x) {
    const std::int32_t xa = t[static_cast<std::size_t>(x) * n + a];
    if (t[static_cast<std::size_t>(xa) * n + b] != t[static_cast<std::size_t>(x) * n + c]) {
      return x;
    }
  }
  return std::nullopt;
}

}  // namespace mgrack::kernels::detail

#endif  // MGRACK_HAVE_AVX2
