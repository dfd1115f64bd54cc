// Compiled with -mavx2; only reached through the runtime dispatcher.
#include <immintrin.h>

#include <algorithm>
#include <bit>

#include "nusring/kernels.hpp"

namespace nusring::kernels::avx2 {

namespace {

inline __m256i load8(const std::uint32_t* p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline unsigned lane_mask(__m256i cmp) {
    return static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(cmp)));
}

}  // namespace

std::size_t find_first(std::span<const std::uint32_t> values, std::uint32_t needle) noexcept {
    const __m256i target = _mm256_set1_epi32(static_cast<int>(needle));
    const std::size_t n = values.size();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const unsigned mask = lane_mask(_mm256_cmpeq_epi32(load8(values.data() + i), target));
        if (mask != 0) return i + static_cast<std::size_t>(std::countr_zero(mask));
    }
    for (; i < n; ++i)
        if (values[i] == needle) return i;
    return npos;
}

std::size_t count_equal(std::span<const std::uint32_t> values, std::uint32_t needle) noexcept {
    const __m256i target = _mm256_set1_epi32(static_cast<int>(needle));
    const std::size_t n = values.size();
    std::size_t count = 0;
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8)
        count += static_cast<std::size_t>(
            std::popcount(lane_mask(_mm256_cmpeq_epi32(load8(values.data() + i), target))));
    for (; i < n; ++i) count += values[i] == needle;
    return count;
}

std::size_t first_mismatch(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) noexcept {
    const std::size_t n = std::min(a.size(), b.size());
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const unsigned eq = lane_mask(_mm256_cmpeq_epi32(load8(a.data() + i), load8(b.data() + i)));
        if (eq != 0xFFu) return i + static_cast<std::size_t>(std::countr_zero(~eq & 0xFFu));
    }
    for (; i < n; ++i)
        if (a[i] != b[i]) return i;
    return npos;
}

std::size_t first_unflagged(std::span<const std::uint32_t> indices,
                            std::span<const std::uint32_t> flags) noexcept {
    const int* base = reinterpret_cast<const int*>(flags.data());
    const __m256i zero = _mm256_setzero_si256();
    const std::size_t n = indices.size();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256i gathered = _mm256_i32gather_epi32(base, load8(indices.data() + i), 4);
        const unsigned mask = lane_mask(_mm256_cmpeq_epi32(gathered, zero));
        if (mask != 0) return i + static_cast<std::size_t>(std::countr_zero(mask));
    }
    for (; i < n; ++i)
        if (flags[indices[i]] == 0) return i;
    return npos;
}

}  // namespace nusring::kernels::avx2
