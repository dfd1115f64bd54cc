#pragma once
// Table-scan kernels used by the analysis hot loops.
//
// Every kernel has a portable scalar reference in `scalar::` and, on x86-64, an AVX2
// variant in `avx2::`. The unqualified entry points dispatch once at startup based on
// CPU support; setting NUSRING_SIMD=scalar in the environment forces the reference path.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace nusring::kernels {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

enum class Isa { Scalar, Avx2 };

namespace scalar {
std::size_t find_first(std::span<const std::uint32_t> values, std::uint32_t needle) noexcept;
std::size_t count_equal(std::span<const std::uint32_t> values, std::uint32_t needle) noexcept;
std::size_t first_mismatch(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) noexcept;
std::size_t first_unflagged(std::span<const std::uint32_t> indices,
                            std::span<const std::uint32_t> flags) noexcept;
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define NUSRING_HAVE_AVX2_KERNELS 1
namespace avx2 {
std::size_t find_first(std::span<const std::uint32_t> values, std::uint32_t needle) noexcept;
std::size_t count_equal(std::span<const std::uint32_t> values, std::uint32_t needle) noexcept;
std::size_t first_mismatch(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) noexcept;
std::size_t first_unflagged(std::span<const std::uint32_t> indices,
                            std::span<const std::uint32_t> flags) noexcept;
}  // namespace avx2
#else
#define NUSRING_HAVE_AVX2_KERNELS 0
#endif

bool avx2_supported() noexcept;
Isa active_isa() noexcept;
std::string_view isa_name(Isa isa) noexcept;

/// Index of the first element equal to `needle`, or npos.
std::size_t find_first(std::span<const std::uint32_t> values, std::uint32_t needle) noexcept;

std::size_t count_equal(std::span<const std::uint32_t> values, std::uint32_t needle) noexcept;

/// First position where the two spans differ (compared over the shorter length), or npos.
std::size_t first_mismatch(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) noexcept;

/// First position i with flags[indices[i]] == 0, or npos. Every index must be < flags.size().
std::size_t first_unflagged(std::span<const std::uint32_t> indices,
                            std::span<const std::uint32_t> flags) noexcept;

}  // namespace nusring::kernels
