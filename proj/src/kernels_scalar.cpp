#include <algorithm>

#include "nusring/kernels.hpp"

namespace nusring::kernels::scalar {

std::size_t find_first(std::span<const std::uint32_t> values, std::uint32_t needle) noexcept {
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] == needle) return i;
    return npos;
}

std::size_t count_equal(std::span<const std::uint32_t> values, std::uint32_t needle) noexcept {
    std::size_t count = 0;
    for (const std::uint32_t v : values) count += v == needle;
    return count;
}

std::size_t first_mismatch(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) noexcept {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return i;
    return npos;
}

std::size_t first_unflagged(std::span<const std::uint32_t> indices,
                            std::span<const std::uint32_t> flags) noexcept {
    for (std::size_t i = 0; i < indices.size(); ++i)
        if (flags[indices[i]] == 0) return i;
    return npos;
}

}  // namespace nusring::kernels::scalar
