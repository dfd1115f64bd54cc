#include <cstdlib>
#include <cstring>

#include "nusring/kernels.hpp"

namespace nusring::kernels {

namespace {

struct Table {
    Isa isa;
    std::size_t (*find_first)(std::span<const std::uint32_t>, std::uint32_t) noexcept;
    std::size_t (*count_equal)(std::span<const std::uint32_t>, std::uint32_t) noexcept;
    std::size_t (*first_mismatch)(std::span<const std::uint32_t>, std::span<const std::uint32_t>) noexcept;
    std::size_t (*first_unflagged)(std::span<const std::uint32_t>, std::span<const std::uint32_t>) noexcept;
};

Table select() {
    const char* forced = std::getenv("NUSRING_SIMD");
    const bool force_scalar = forced != nullptr && std::strcmp(forced, "scalar") == 0;
#if NUSRING_HAVE_AVX2_KERNELS
    if (!force_scalar && avx2_supported())
        return {Isa::Avx2, &avx2::find_first, &avx2::count_equal, &avx2::first_mismatch,
                &avx2::first_unflagged};
#else
    (void)force_scalar;
#endif
    return {Isa::Scalar, &scalar::find_first, &scalar::count_equal, &scalar::first_mismatch,
            &scalar::first_unflagged};
}

const Table& table() {
    static const Table t = select();
    return t;
}

}  // namespace

bool avx2_supported() noexcept {
#if NUSRING_HAVE_AVX2_KERNELS && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Isa active_isa() noexcept { return table().isa; }

std::string_view isa_name(Isa isa) noexcept { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

std::size_t find_first(std::span<const std::uint32_t> values, std::uint32_t needle) noexcept {
    return table().find_first(values, needle);
}

std::size_t count_equal(std::span<const std::uint32_t> values, std::uint32_t needle) noexcept {
    return table().count_equal(values, needle);
}

std::size_t first_mismatch(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) noexcept {
    return table().first_mismatch(a, b);
}

std::size_t first_unflagged(std::span<const std::uint32_t> indices,
                            std::span<const std::uint32_t> flags) noexcept {
    return table().first_unflagged(indices, flags);
}

}  // namespace nusring::kernels
