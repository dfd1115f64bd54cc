#pragma once
// Finite-ring arithmetic engine.
//
// Elements of a ring of order n are the dense indices 0..n-1. Each construction supplies
// the arithmetic on indices plus a bijection between indices and a structured
// ElementForm. Rings are immutable once created and are shared through RingHandle.

#include <any>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <vector>

#include "nusring/check_result.hpp"
#include "nusring/element_form.hpp"

namespace nusring {

using Index = std::uint32_t;

class Ring;
using RingHandle = std::shared_ptr<const Ring>;

/// An element tagged with the identity of the ring that produced it.
class Element {
public:
    Index index() const noexcept { return index_; }
    std::uint64_t ring_id() const noexcept { return ring_id_; }

    friend bool operator==(const Element&, const Element&) = default;

private:
    friend class Ring;
    Element(Index index, std::uint64_t ring_id) noexcept : index_(index), ring_id_(ring_id) {}

    Index index_;
    std::uint64_t ring_id_;
};

/// Arithmetic and encoding callbacks a construction hands to Ring::create.
struct RingOps {
    std::function<Index(Index, Index)> add;
    std::function<Index(Index, Index)> mul;
    std::function<Index(Index)> neg;
    std::function<ElementForm(Index)> decode;
    /// Must throw EncodingError for forms that do not denote an element.
    std::function<Index(const ElementForm&)> encode;
};

/// The sequence a, a^2, a^3, ... up to its first repetition.
struct PowerOrbit {
    /// a^1 .. a^m, pairwise distinct.
    std::vector<Index> sequence;
    /// Exponent (1-based) at which the periodic part starts: a^(m+1) = a^cycle_start.
    std::size_t cycle_start = 1;
    std::size_t cycle_length = 1;

    /// a^k for k >= 1.
    Index at(std::uint64_t k) const;
    /// Least k >= 1 with a^k == x.
    std::optional<std::size_t> exponent_of(Index x) const;
    bool contains(Index x) const { return exponent_of(x).has_value(); }
};

class Ring {
public:
    /// Dense operation tables are materialized eagerly at or below this order.
    static constexpr Index kTableThreshold = 256;

    static RingHandle create(std::string label, Index order, Index zero, Index one, RingOps ops,
                             std::any construction = {});

    /// Ring given directly by row-major operation tables; elements decode to their index.
    /// No axioms are checked here (see verify_ring_axioms).
    static RingHandle from_tables(std::string label, Index order, std::vector<Index> add_table,
                                  std::vector<Index> mul_table, std::vector<Index> neg_table, Index zero,
                                  Index one);

    Index order() const noexcept { return order_; }
    Index zero() const noexcept { return zero_; }
    Index one() const noexcept { return one_; }
    const std::string& label() const noexcept { return label_; }
    std::uint64_t id() const noexcept { return id_; }
    bool has_tables() const noexcept { return !mul_table_.empty(); }

    // Index-level arithmetic. Indices are trusted; use the Element overloads for checked access.
    Index add(Index a, Index b) const {
        return add_table_.empty() ? ops_.add(a, b) : add_table_[static_cast<std::size_t>(a) * order_ + b];
    }
    Index mul(Index a, Index b) const {
        return mul_table_.empty() ? ops_.mul(a, b) : mul_table_[static_cast<std::size_t>(a) * order_ + b];
    }
    Index neg(Index a) const { return neg_table_.empty() ? ops_.neg(a) : neg_table_[a]; }
    Index sub(Index a, Index b) const { return add(a, neg(b)); }
    /// a^k with a^0 = one.
    Index pow(Index a, std::uint64_t k) const;
    /// The integer multiple k * one (negative k allowed).
    Index integer(std::int64_t k) const;

    // Checked element API.
    Element element(Index index) const;
    Element element(const ElementForm& form) const { return element(encode(form)); }
    Index index_of(const Element& e) const;
    Element add(const Element& a, const Element& b) const { return wrap(add(index_of(a), index_of(b))); }
    Element mul(const Element& a, const Element& b) const { return wrap(mul(index_of(a), index_of(b))); }
    Element neg(const Element& a) const { return wrap(neg(index_of(a))); }
    Element sub(const Element& a, const Element& b) const { return wrap(sub(index_of(a), index_of(b))); }
    Element pow(const Element& a, std::uint64_t k) const { return wrap(pow(index_of(a), k)); }
    PowerOrbit power_orbit(const Element& a) const { return power_orbit(index_of(a)); }

    /// All elements in ascending index order.
    auto elements() const {
        return std::views::iota(Index{0}, order_) |
               std::views::transform([id = id_](Index i) { return Element(i, id); });
    }

    PowerOrbit power_orbit(Index a) const;

    /// out[b] = a * b for every b; out.size() must equal order().
    void mul_row(Index a, std::span<Index> out) const;
    /// out[r] = r * b for every r; out.size() must equal order().
    void mul_column(Index b, std::span<Index> out) const;

    ElementForm decode(Index a) const { return ops_.decode(a); }
    Index encode(const ElementForm& form) const;
    std::string format(Index a) const { return to_string(decode(a)); }

    /// Construction-specific metadata (e.g. group-ring or product structure), if of type T.
    template <class T>
    const T* construction() const noexcept {
        return std::any_cast<T>(&construction_);
    }

private:
    Ring() = default;
    Element wrap(Index i) const noexcept { return Element(i, id_); }

    std::string label_;
    Index order_ = 0;
    Index zero_ = 0;
    Index one_ = 0;
    std::uint64_t id_ = 0;
    RingOps ops_;
    std::vector<Index> add_table_;
    std::vector<Index> mul_table_;
    std::vector<Index> neg_table_;
    std::any construction_;
};

/// Computes power orbits for many elements of one ring, reusing an O(order) scratch array.
class OrbitWalker {
public:
    explicit OrbitWalker(const Ring& ring);
    PowerOrbit operator()(Index a);

private:
    const Ring& ring_;
    std::vector<std::uint32_t> stamp_;
    std::vector<std::uint32_t> position_;
    std::uint32_t epoch_ = 0;
};

struct AxiomMode {
    bool full = true;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    /// Full mode refuses rings with order^3 above this many triples.
    std::uint64_t max_full_triples = 64ull * 64ull * 64ull;

    static AxiomMode exhaustive(std::uint64_t max_triples = 64ull * 64ull * 64ull) {
        return AxiomMode{true, 0, 0, max_triples};
    }
    static AxiomMode sampled(std::size_t count, std::uint64_t seed) { return AxiomMode{false, count, seed}; }
};

/// Checks the abelian-group, associativity, identity and distributivity axioms.
/// On failure the result carries the first violating triple. Throws BudgetExceededError
/// when a full check would exceed mode.max_full_triples.
CheckResult verify_ring_axioms(const Ring& ring, const AxiomMode& mode);

/// Full check up to 64 elements, otherwise `samples` random triples.
CheckResult verify_ring_axioms_auto(const Ring& ring, std::size_t samples = 10000, std::uint64_t seed = 1);

}  // namespace nusring
