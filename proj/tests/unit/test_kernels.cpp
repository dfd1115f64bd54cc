#include <doctest.h>

#include <random>
#include <vector>

#include "nusring/kernels.hpp"

using namespace nusring;
namespace k = nusring::kernels;

TEST_CASE("dispatch reports an isa") {
    const auto isa = k::active_isa();
    CHECK((isa == k::Isa::Scalar || isa == k::Isa::Avx2));
    if (!k::avx2_supported()) CHECK(isa == k::Isa::Scalar);
    CHECK_FALSE(k::isa_name(isa).empty());
}

TEST_CASE("scalar kernels on small inputs") {
    const std::vector<std::uint32_t> v{5, 3, 3, 9};
    CHECK(k::scalar::find_first(v, 3) == 1);
    CHECK(k::scalar::find_first(v, 4) == k::npos);
    CHECK(k::scalar::count_equal(v, 3) == 2);
    CHECK(k::scalar::first_mismatch(v, std::vector<std::uint32_t>{5, 3, 4, 9}) == 2);
    CHECK(k::scalar::first_mismatch(v, v) == k::npos);
    const std::vector<std::uint32_t> flags{1, 1, 0, 1, 1, 1, 1, 1, 1, 1};
    CHECK(k::scalar::first_unflagged(v, flags) == k::npos);
    CHECK(k::scalar::first_unflagged(std::vector<std::uint32_t>{0, 2}, flags) == 1);
    CHECK(k::scalar::find_first({}, 0) == k::npos);
}

#if NUSRING_HAVE_AVX2_KERNELS
TEST_CASE("avx2 kernels match the scalar reference") {
    if (!k::avx2_supported()) return;
    std::mt19937 rng(11);
    for (std::size_t n = 0; n <= 80; ++n)
        for (int trial = 0; trial < 25; ++trial) {
            std::uniform_int_distribution<std::uint32_t> small(0, 7);
            std::vector<std::uint32_t> a(n), b(n), flags(8);
            for (auto& x : a) x = small(rng);
            b = a;
            if (n > 0 && trial % 2 == 0) b[rng() % n] ^= 1u;
            for (auto& f : flags) f = (rng() % 5) != 0;
            const std::uint32_t needle = small(rng);
            CAPTURE(n);
            REQUIRE(k::avx2::find_first(a, needle) == k::scalar::find_first(a, needle));
            REQUIRE(k::avx2::count_equal(a, needle) == k::scalar::count_equal(a, needle));
            REQUIRE(k::avx2::first_mismatch(a, b) == k::scalar::first_mismatch(a, b));
            REQUIRE(k::avx2::first_unflagged(a, flags) == k::scalar::first_unflagged(a, flags));
        }
}

TEST_CASE("avx2 kernels at extreme values and misaligned spans") {
    if (!k::avx2_supported()) return;
    std::vector<std::uint32_t> a(100, 0xFFFFFFFFu);
    a[73] = 0x80000000u;
    for (std::size_t off = 0; off < 9; ++off) {
        const std::span<const std::uint32_t> s(a.data() + off, a.size() - off);
        CHECK(k::avx2::find_first(s, 0x80000000u) == k::scalar::find_first(s, 0x80000000u));
        CHECK(k::avx2::count_equal(s, 0xFFFFFFFFu) == k::scalar::count_equal(s, 0xFFFFFFFFu));
    }
}
#endif

TEST_CASE("dispatched kernels match the scalar reference") {
    std::vector<std::uint32_t> v(1000);
    for (std::uint32_t i = 0; i < v.size(); ++i) v[i] = (i * 2654435761u) % 97;
    for (std::uint32_t needle = 0; needle < 100; ++needle) {
        CHECK(k::find_first(v, needle) == k::scalar::find_first(v, needle));
        CHECK(k::count_equal(v, needle) == k::scalar::count_equal(v, needle));
    }
}
