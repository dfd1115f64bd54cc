#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nusring {

/// A finite group given by its Cayley table. Axioms are verified on construction.
class FiniteGroup {
public:
    using Index = std::uint32_t;

    /// Throws InvalidConstructionError unless `table` (row-major, order x order) is a group
    /// with the given identity.
    static FiniteGroup from_table(std::string label, Index order, std::vector<Index> table, Index identity);

    static FiniteGroup cyclic(Index n);
    static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
    /// Symmetries of the square, order 8. Element r^i s^j has index i + 4j.
    static FiniteGroup dihedral8();
    /// {±1, ±i, ±j, ±k}. Index = 4*sign + unit, units ordered 1, i, j, k.
    static FiniteGroup quaternion8();

    const std::string& label() const noexcept { return label_; }
    Index order() const noexcept { return order_; }
    Index identity() const noexcept { return identity_; }
    Index mul(Index g, Index h) const { return table_[static_cast<std::size_t>(g) * order_ + h]; }
    Index inverse(Index g) const { return inverse_[g]; }
    Index element_order(Index g) const;

    /// True when every element order is a power of p (the trivial group qualifies for every p).
    bool is_p_group(std::uint32_t p) const;
    /// The prime p for a nontrivial p-group, nullopt for the trivial group or a non-p-group.
    std::optional<std::uint32_t> p_group_prime() const;

private:
    FiniteGroup() = default;

    std::string label_;
    Index order_ = 0;
    Index identity_ = 0;
    std::vector<Index> table_;
    std::vector<Index> inverse_;
};

/// C1..C6, C2xC2, C2xC4, D4 and Q8.
std::vector<FiniteGroup> builtin_groups();

}  // namespace nusring
