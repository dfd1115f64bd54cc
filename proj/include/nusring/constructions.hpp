#pragma once
// Builders for the ring families: Z_n, finite products, full/triangular/patterned matrix
// rings, skew triangular rings T_k(R, alpha), trivial extensions, formal triangular rings,
// group rings, quotients and corner rings.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nusring/groups.hpp"
#include "nusring/ring.hpp"

namespace nusring {

/// Upper bound on the order of any ring a builder may produce.
struct Budget {
    static constexpr std::uint64_t kDefaultMaxOrder = 4096;
    std::uint64_t max_order = kDefaultMaxOrder;
};

/// Throws BudgetExceededError if base^exponent exceeds the budget (saturating arithmetic).
void require_power_within(const Budget& budget, std::uint64_t base, std::uint64_t exponent, const std::string& what);
std::uint64_t saturating_power(std::uint64_t base, std::uint64_t exponent);

/// A unital ring endomorphism given by its image table, verified exhaustively.
class Endomorphism {
public:
    static Endomorphism identity(RingHandle ring);
    /// Throws InvalidConstructionError unless `image` is a unital ring endomorphism.
    static Endomorphism from_table(RingHandle ring, std::vector<Index> image, std::string label);
    /// Coordinate swap (a, b) -> (b, a) on a two-factor product ring.
    static Endomorphism swap(RingHandle product);

    const RingHandle& ring() const noexcept { return ring_; }
    const std::string& label() const noexcept { return label_; }
    Index operator()(Index a) const { return image_[a]; }
    bool is_identity() const;

private:
    RingHandle ring_;
    std::vector<Index> image_;
    std::string label_;
};

/// The bimodule M = Z_k over (R, S) with r.m.s := phi(r) m psi(s).
class BimoduleSpec {
public:
    /// phi: R -> Z_k and psi: S -> Z_k as image tables (residues), verified to be unital ring
    /// homomorphisms.
    static BimoduleSpec from_tables(RingHandle r, RingHandle s, Index modulus, std::vector<Index> phi,
                                    std::vector<Index> psi);
    /// Reduction maps Z_a -> Z_k and Z_b -> Z_k for Z_a, Z_b built by make_zmod; requires k | a, k | b.
    static BimoduleSpec reduction(RingHandle r, RingHandle s, Index modulus);

    const RingHandle& left_ring() const noexcept { return r_; }
    const RingHandle& right_ring() const noexcept { return s_; }
    Index modulus() const noexcept { return modulus_; }
    Index phi(Index r) const { return phi_[r]; }
    Index psi(Index s) const { return psi_[s]; }

private:
    RingHandle r_;
    RingHandle s_;
    Index modulus_ = 1;
    std::vector<Index> phi_;
    std::vector<Index> psi_;
};

// Metadata attached to constructed rings, retrievable through Ring::construction<T>().

struct ZmodData {
    Index modulus;
};

struct ProductData {
    std::vector<RingHandle> factors;
};

enum class MatrixShape { Full, UpperTriangular, ConstantDiagonal, Snm, Tnm, Un };

/// A subring of M_size(base) whose entries are drawn from a list of free parameters.
struct MatrixPatternData {
    RingHandle base;
    MatrixShape shape;
    unsigned size;
    /// Row-major: -1 for a forced zero entry, otherwise the parameter supplying that entry.
    std::vector<int> pattern;
    unsigned parameters;
};

struct SkewTriangularData {
    RingHandle base;
    unsigned length;
    Endomorphism alpha;
};

struct TrivialExtensionData {
    RingHandle base;
};

struct FormalTriangularData {
    BimoduleSpec bimodule;
};

struct GroupRingData {
    RingHandle coefficients;
    FiniteGroup group;
};

struct QuotientData {
    RingHandle parent;
    std::vector<Index> coset_of;        // parent index -> quotient index
    std::vector<Index> representative;  // quotient index -> minimal parent index
};

struct CornerData {
    RingHandle parent;
    Index idempotent;
    std::vector<Index> carrier;  // sorted parent indices of eRe
};

RingHandle make_zmod(std::uint64_t n, const Budget& budget = {});
RingHandle make_product(std::span<const RingHandle> factors, const Budget& budget = {});
RingHandle make_product(std::initializer_list<RingHandle> factors, const Budget& budget = {});
RingHandle make_matrix(RingHandle base, unsigned k, const Budget& budget = {});
RingHandle make_upper_triangular(RingHandle base, unsigned k, const Budget& budget = {});
/// Upper triangular k x k matrices with a11 = a22 = ... = akk.
RingHandle make_sn_constant_diag(RingHandle base, unsigned k, const Budget& budget = {});
/// Subring of T_{n+m-1}: an n x n Toeplitz block and an m x m Toeplitz block sharing the
/// diagonal entry a, plus a free (n-1) x (m-1) upper-right block.
RingHandle make_snm(RingHandle base, unsigned n, unsigned m, const Budget& budget = {});
/// Block diagonal of an n x n and an m x m upper Toeplitz block with a common diagonal.
RingHandle make_tnm(RingHandle base, unsigned n, unsigned m, const Budget& budget = {});
/// n x n upper triangular with constant diagonal; superdiagonal d of odd rows is b_d, of even rows c_d.
RingHandle make_un(RingHandle base, unsigned n, const Budget& budget = {});
/// Coefficient tuples (a0, ..., a_{k-1}) with c_i = sum_j a_j alpha^j(b_{i-j}).
RingHandle make_skew_triangular(RingHandle base, unsigned k, const Endomorphism& alpha, const Budget& budget = {});
/// T(R, R): pairs (r, m) with (r, m)(s, n) = (rs, rn + ms).
RingHandle make_trivial_extension(RingHandle base, const Budget& budget = {});
/// Triples (r, m, s) multiplied as 2x2 upper triangular matrices over the bimodule.
RingHandle make_formal_triangular(const BimoduleSpec& bimodule, const Budget& budget = {});
RingHandle make_group_ring(RingHandle coefficients, const FiniteGroup& group, const Budget& budget = {});
/// R/I for a two-sided ideal given by its elements; verifies I is an ideal. Cosets are
/// numbered by their minimal parent index.
RingHandle make_quotient(RingHandle parent, std::span<const Index> ideal, const std::string& ideal_label);
/// eRe with identity e; e must be a nonzero idempotent.
RingHandle make_corner(RingHandle parent, Index e);

/// The isomorphism R[x, alpha]/<x^k> -> T_k(R, alpha): coefficient list (a0..a_{k-1}) to element.
Index skew_from_coefficients(const Ring& skew, std::span<const Index> coefficients);
std::vector<Index> skew_to_coefficients(const Ring& skew, Index element);

}  // namespace nusring
