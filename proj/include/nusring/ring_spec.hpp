#pragma once
// Ring-spec DSL:
//
//   spec  := term { "x" term }
//   term  := "Z" INT | "M" INT "(" spec ")" | "T" INT "(" spec ")" | "S" INT "(" spec ")"
//          | "Snm" INT INT "(" spec ")" | "Tnm" INT INT "(" spec ")" | "U" INT "(" spec ")"
//          | "TE" "(" spec ")" | "GR" "(" spec "," group ")" | "skewT" INT "(" spec "," endo ")"
//   group := "C" INT { "x" "C" INT } | "D4" | "Q8"
//   endo  := "id" | "swap"
//
// FormalTri, Quotient and Corner nodes have no surface syntax; they are built in code.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nusring/constructions.hpp"

namespace nusring {

struct GroupSpec {
    enum class Kind { Cyclic, D4, Q8 };
    Kind kind = Kind::Cyclic;
    std::vector<std::uint64_t> cyclic_orders;  // Cyclic: C n1 x C n2 x ...

    std::uint64_t order() const;
    FiniteGroup build() const;
    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

struct RingSpec {
    enum class Kind {
        Zmod,
        Product,
        Matrix,
        Triangular,
        SkewTriangular,
        SnDiag,
        Snm,
        Tnm,
        Un,
        TrivExt,
        FormalTri,
        GroupRing,
        Quotient,
        Corner,
    };
    enum class Endo { Identity, Swap };
    enum class IdealKind { Jacobson, Augmentation };

    Kind kind = Kind::Zmod;
    /// Zmod: n. Matrix, Triangular, SnDiag, Un, SkewTriangular: size. Snm, Tnm: n, m.
    /// FormalTri: bimodule modulus k.
    std::vector<std::uint64_t> params;
    /// Product: factors. FormalTri: R, S (both Zmod). Others: the single base.
    std::vector<RingSpec> children;
    GroupSpec group;
    Endo endo = Endo::Identity;
    IdealKind ideal = IdealKind::Jacobson;
    ElementForm corner;  // Corner: the idempotent

    friend bool operator==(const RingSpec&, const RingSpec&) = default;

    static RingSpec zmod(std::uint64_t n);
    static RingSpec product(std::vector<RingSpec> factors);
    static RingSpec unary(Kind kind, std::vector<std::uint64_t> params, RingSpec base);
    static RingSpec formal_triangular(std::uint64_t a, std::uint64_t b, std::uint64_t k);
    static RingSpec quotient(RingSpec parent, IdealKind ideal);
    static RingSpec corner_of(RingSpec parent, ElementForm idempotent);
};

/// Throws ParseError (with the offending position) on syntax or parameter-range errors.
RingSpec parse_spec(std::string_view text);
/// Canonical text; parse_spec(print_spec(s)) == s for every grammar-produced spec.
std::string print_spec(const RingSpec& spec);
/// Order of the ring the spec denotes (an upper bound for Quotient/Corner), saturating.
std::uint64_t estimated_order(const RingSpec& spec);
/// Checks the budget from the spec first (BudgetExceededError), then builds.
RingHandle build_ring(const RingSpec& spec, const Budget& budget = {});

}  // namespace nusring
