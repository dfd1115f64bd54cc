#include "nusring/groups.hpp"

#include <array>

#include "nusring/errors.hpp"

namespace nusring {

FiniteGroup FiniteGroup::from_table(std::string label, Index order, std::vector<Index> table, Index identity) {
    const std::size_t n = order;
    if (order == 0 || table.size() != n * n) throw InvalidConstructionError("group table has the wrong size");
    if (identity >= order) throw InvalidConstructionError("group identity out of range");
    for (const Index v : table)
        if (v >= order) throw InvalidConstructionError("group table entry out of range");
    FiniteGroup g;
    g.label_ = std::move(label);
    g.order_ = order;
    g.identity_ = identity;
    g.table_ = std::move(table);
    g.inverse_.assign(n, order);
    for (Index a = 0; a < order; ++a) {
        if (g.mul(identity, a) != a || g.mul(a, identity) != a)
            throw InvalidConstructionError(g.label_ + ": identity axiom fails");
        for (Index b = 0; b < order; ++b) {
            if (g.mul(a, b) == identity && g.mul(b, a) == identity) g.inverse_[a] = b;
            for (Index c = 0; c < order; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
                    throw InvalidConstructionError(g.label_ + ": associativity fails");
        }
        if (g.inverse_[a] == order) throw InvalidConstructionError(g.label_ + ": missing inverse");
    }
    return g;
}

FiniteGroup FiniteGroup::cyclic(Index n) {
    if (n == 0) throw InvalidConstructionError("cyclic group order must be positive");
    std::vector<Index> table(static_cast<std::size_t>(n) * n);
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
    return from_table("C" + std::to_string(n), n, std::move(table), 0);
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    const Index n = g.order() * h.order();
    std::vector<Index> table(static_cast<std::size_t>(n) * n);
    // (a, b) has index a * |H| + b.
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y) {
            const Index a = g.mul(x / h.order(), y / h.order());
            const Index b = h.mul(x % h.order(), y % h.order());
            table[x * n + y] = a * h.order() + b;
        }
    return from_table(g.label() + "x" + h.label(), n, std::move(table), g.identity() * h.order() + h.identity());
}

FiniteGroup FiniteGroup::dihedral8() {
    std::vector<Index> table(64);
    for (Index x = 0; x < 8; ++x)
        for (Index y = 0; y < 8; ++y) {
            const Index a = x % 4, b = x / 4, c = y % 4, d = y / 4;
            // r^a s^b r^c s^d = r^(a + (-1)^b c) s^(b + d)
            const Index rot = (b == 0 ? a + c : a + 4 - c) % 4;
            table[x * 8 + y] = rot + 4 * ((b + d) % 2);
        }
    return from_table("D4", 8, std::move(table), 0);
}

FiniteGroup FiniteGroup::quaternion8() {
    // unit products: rows/cols 1, i, j, k -> (sign, unit)
    static constexpr std::array<std::array<std::pair<int, int>, 4>, 4> units{{
        {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
        {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
        {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
        {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
    }};
    std::vector<Index> table(64);
    for (Index x = 0; x < 8; ++x)
        for (Index y = 0; y < 8; ++y) {
            const auto [sign, unit] = units[x % 4][y % 4];
            const Index s = (x / 4 + y / 4 + static_cast<Index>(sign)) % 2;
            table[x * 8 + y] = 4 * s + static_cast<Index>(unit);
        }
    return from_table("Q8", 8, std::move(table), 0);
}

FiniteGroup::Index FiniteGroup::element_order(Index g) const {
    Index k = 1;
    for (Index x = g; x != identity_; x = mul(x, g)) ++k;
    return k;
}

bool FiniteGroup::is_p_group(std::uint32_t p) const {
    if (p < 2) return false;
    for (Index g = 0; g < order_; ++g) {
        Index k = element_order(g);
        while (k % p == 0) k /= p;
        if (k != 1) return false;
    }
    return true;
}

std::optional<std::uint32_t> FiniteGroup::p_group_prime() const {
    if (order_ == 1) return std::nullopt;
    std::uint32_t p = 2;
    Index n = order_;
    while (n % p != 0) ++p;
    if (is_p_group(p)) return p;
    return std::nullopt;
}

std::vector<FiniteGroup> builtin_groups() {
    std::vector<FiniteGroup> groups;
    for (FiniteGroup::Index n = 1; n <= 6; ++n) groups.push_back(FiniteGroup::cyclic(n));
    groups.push_back(FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)));
    groups.push_back(FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(4)));
    groups.push_back(FiniteGroup::dihedral8());
    groups.push_back(FiniteGroup::quaternion8());
    return groups;
}

}  // namespace nusring
