#pragma once
// Element classification, structure sets, ideals and decomposition search.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nusring/ring.hpp"

namespace nusring {

/// A two-sided ideal, verified on construction.
class Ideal {
public:
    /// Throws InvalidConstructionError unless `elements` is a two-sided ideal of `ring`.
    static Ideal from_elements(RingHandle ring, std::vector<Index> elements, std::string label);

    const RingHandle& ring() const noexcept { return ring_; }
    /// Sorted ascending.
    const std::vector<Index>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool contains(Index x) const { return x < member_.size() && member_[x] != 0; }
    const std::string& label() const noexcept { return label_; }

private:
    RingHandle ring_;
    std::vector<Index> elements_;
    std::vector<std::uint8_t> member_;
    std::string label_;
};

/// Greedy additive generating set: ascending elements not already in the span of earlier ones.
std::vector<Index> additive_generators(const Ring& ring);

/// Per-ring structure data computed once, read-only afterwards.
class Profile {
public:
    static std::shared_ptr<const Profile> compute(RingHandle ring);

    const RingHandle& ring_handle() const noexcept { return ring_; }
    const Ring& ring() const noexcept { return *ring_; }

    bool is_unit(Index a) const { return inverse_[a] != kNone; }
    /// Two-sided inverse; requires is_unit(a).
    Index inverse(Index a) const { return inverse_[a]; }
    bool is_nilpotent(Index a) const { return nil_index_[a] != 0; }
    /// Least k >= 1 with a^k = 0, or 0 when a is not nilpotent.
    std::uint32_t nilpotency_index(Index a) const { return nil_index_[a]; }
    bool is_idempotent(Index a) const { return idempotent_flag_[a] != 0; }
    bool is_square_idempotent(Index a) const { return square_idempotent_flag_[a] != 0; }
    bool in_jacobson(Index a) const { return jacobson_flag_[a] != 0; }
    bool is_central(Index a) const { return central_flag_[a] != 0; }

    const std::vector<Index>& units() const noexcept { return units_; }
    const std::vector<Index>& nilpotents() const noexcept { return nilpotents_; }
    const std::vector<Index>& idempotents() const noexcept { return idempotents_; }
    const std::vector<Index>& square_idempotents() const noexcept { return square_idempotents_; }
    const std::vector<Index>& center() const noexcept { return center_; }
    const std::vector<Index>& additive_generators() const noexcept { return generators_; }
    const Ideal& jacobson() const noexcept { return *jacobson_; }
    bool commutative() const noexcept { return center_.size() == ring_->order(); }

private:
    static constexpr Index kNone = static_cast<Index>(-1);

    RingHandle ring_;
    std::vector<Index> inverse_;
    std::vector<std::uint32_t> nil_index_;
    std::vector<std::uint8_t> idempotent_flag_;
    std::vector<std::uint8_t> square_idempotent_flag_;
    std::vector<std::uint8_t> jacobson_flag_;
    std::vector<std::uint8_t> central_flag_;
    std::vector<Index> units_;
    std::vector<Index> nilpotents_;
    std::vector<Index> idempotents_;
    std::vector<Index> square_idempotents_;
    std::vector<Index> center_;
    std::vector<Index> generators_;
    std::optional<Ideal> jacobson_;
};

using ProfileHandle = std::shared_ptr<const Profile>;

/// {x : 1 - r x is a unit for all r}. Throws InvariantViolation if the set is not an ideal.
Ideal jacobson_radical(const Profile& profile);

/// Non-units closed under addition. Throws InvariantViolation if they are closed under
/// addition but fail to form an ideal. The zero ring counts as local.
bool is_local(const Profile& profile);
/// Least non-unit a for which some non-unit b has a + b a unit, when not local.
std::optional<Index> locality_witness(const Profile& profile);
bool has_only_trivial_idempotents(const Profile& profile);

/// Smallest ideal containing `generators`.
Ideal ideal_generated(RingHandle ring, const std::vector<Index>& generators, std::string label);
/// I^n: the ideal generated by all n-fold products of elements of I (n >= 1).
Ideal ideal_power(const Ideal& ideal, unsigned n);
bool is_nil_ideal(const Profile& profile, const Ideal& ideal);

/// Coefficient sum of a group-ring element. Throws InvalidConstructionError for other rings.
Index augmentation(const Ring& group_ring, Index x);
Ideal augmentation_ideal(RingHandle group_ring);

RingHandle make_quotient(RingHandle parent, const Ideal& ideal);

enum class DecompKind { Clean, NilClean, SquareNilClean };

std::string_view to_string(DecompKind kind) noexcept;

/// a = e + n with the conditions of `kind`.
struct DecompWitness {
    DecompKind kind;
    Index a;
    Index e;
    Index n;
    bool commuting;
};

/// First decomposition in ascending order of e (idempotents for clean and nil-clean,
/// square-idempotents for square-nil-clean). With `strong`, en = ne is required.
std::optional<DecompWitness> decompose(const Profile& profile, Index a, DecompKind kind, bool strong);
/// Every decomposition of `kind`, commuting or not, in ascending order of e.
std::vector<DecompWitness> decompositions(const Profile& profile, Index a, DecompKind kind);

/// Turns a strongly square-nil-clean witness a = e + n into the strongly clean witness
/// a = (1 - e^2) + (e - 1 + e^2 + n). Throws InvariantViolation if the result is not one.
DecompWitness clean_witness_from_square(const Profile& profile, const DecompWitness& witness);

struct PiRegularWitness {
    std::uint64_t n;
    Index r;  // a^n = a^(n+1) r
};

/// Some n <= order and r with a^n = a^(n+1) r, if any.
std::optional<PiRegularWitness> strongly_pi_regular_witness(const Ring& ring, Index a);
inline bool is_strongly_pi_regular_element(const Ring& ring, Index a) {
    return strongly_pi_regular_witness(ring, a).has_value();
}

}  // namespace nusring
