#pragma once
// Brute-force reference computations. They use only Ring::add/mul/neg and never touch
// Profile, power orbits or the kernels, so they can judge the library's fast paths.

#include <cstdint>
#include <optional>
#include <vector>

#include "nusring/ring.hpp"

namespace oracle {

using nusring::Index;
using nusring::Ring;

inline bool is_unit(const Ring& r, Index a) {
    for (Index b = 0; b < r.order(); ++b)
        if (r.mul(a, b) == r.one() && r.mul(b, a) == r.one()) return true;
    return false;
}

inline bool is_nilpotent(const Ring& r, Index a) {
    Index x = a;
    for (Index k = 0; k <= r.order(); ++k) {
        if (x == r.zero()) return true;
        x = r.mul(x, a);
    }
    return false;
}

inline bool is_idempotent(const Ring& r, Index a) { return r.mul(a, a) == a; }

inline bool is_square_idempotent(const Ring& r, Index a) {
    const Index a2 = r.mul(a, a);
    return r.mul(a2, a2) == a2;
}

/// {x : 1 - s x is a unit for every s}.
inline std::vector<Index> jacobson(const Ring& r) {
    std::vector<bool> unit(r.order());
    for (Index a = 0; a < r.order(); ++a) unit[a] = is_unit(r, a);
    std::vector<Index> out;
    for (Index x = 0; x < r.order(); ++x) {
        bool in = true;
        for (Index s = 0; s < r.order() && in; ++s) in = unit[r.add(r.one(), r.neg(r.mul(s, x)))];
        if (in) out.push_back(x);
    }
    return out;
}

enum class Kind { Clean, NilClean, SquareNilClean };

/// Scans every pair (e, x) with e + x = a.
inline bool decomposes(const Ring& r, Index a, Kind kind, bool strong) {
    for (Index e = 0; e < r.order(); ++e) {
        const bool e_ok = kind == Kind::SquareNilClean ? is_square_idempotent(r, e) : is_idempotent(r, e);
        if (!e_ok) continue;
        for (Index x = 0; x < r.order(); ++x) {
            if (r.add(e, x) != a) continue;
            const bool x_ok = kind == Kind::Clean ? is_unit(r, x) : is_nilpotent(r, x);
            if (x_ok && (!strong || r.mul(e, x) == r.mul(x, e))) return true;
        }
    }
    return false;
}

/// Some n >= 1 and r with a^n = a^(n+1) r.
inline bool strongly_pi_regular(const Ring& r, Index a) {
    Index an = a;
    for (Index n = 1; n <= r.order(); ++n) {
        const Index an1 = r.mul(an, a);
        for (Index s = 0; s < r.order(); ++s)
            if (r.mul(an1, s) == an) return true;
        an = an1;
    }
    return false;
}

/// Every non-unit satisfies the decomposition.
inline bool non_units_decompose(const Ring& r, Kind kind, bool strong) {
    for (Index a = 0; a < r.order(); ++a)
        if (!is_unit(r, a) && !decomposes(r, a, kind, strong)) return false;
    return true;
}

inline bool all_decompose(const Ring& r, Kind kind, bool strong) {
    for (Index a = 0; a < r.order(); ++a)
        if (!decomposes(r, a, kind, strong)) return false;
    return true;
}

/// k x k matrices over Z_n as plain integer vectors, row-major.
using IntMatrix = std::vector<std::int64_t>;

inline IntMatrix matmul(const IntMatrix& a, const IntMatrix& b, unsigned k, std::int64_t n) {
    IntMatrix c(static_cast<std::size_t>(k) * k, 0);
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) {
            std::int64_t s = 0;
            for (unsigned t = 0; t < k; ++t) s += a[i * k + t] * b[t * k + j];
            c[i * k + j] = ((s % n) + n) % n;
        }
    return c;
}

}  // namespace oracle
