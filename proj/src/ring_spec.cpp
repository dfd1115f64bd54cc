#include "nusring/ring_spec.hpp"

#include <cctype>
#include <limits>

#include "nusring/analysis.hpp"
#include "nusring/errors.hpp"

namespace nusring {

namespace {

constexpr std::uint64_t kMaxParameter = std::uint64_t{1} << 31;

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    RingSpec parse() {
        skip_ws();
        if (pos_ == text_.size()) throw ParseError("empty ring spec", pos_);
        RingSpec spec = parse_spec();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return spec;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(std::string_view token) {
        skip_ws();
        if (text_.substr(pos_).starts_with(token)) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view token) {
        if (!accept(token)) throw ParseError("expected '" + std::string(token) + "'", pos_);
    }

    std::uint64_t integer(std::uint64_t min, const char* what) {
        skip_ws();
        const std::size_t start = pos_;
        std::uint64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            if (value > kMaxParameter) throw ParseError(std::string(what) + " is too large", start);
            ++pos_;
        }
        if (pos_ == start) throw ParseError(std::string("expected ") + what, start);
        if (value < min)
            throw ParseError(std::string(what) + " must be at least " + std::to_string(min) + ", got " +
                                 std::to_string(value),
                             start);
        return value;
    }

    RingSpec parse_spec() {
        std::vector<RingSpec> factors;
        factors.push_back(parse_term());
        while (accept("x")) factors.push_back(parse_term());
        if (factors.size() == 1) return std::move(factors.front());
        return RingSpec::product(std::move(factors));
    }

    RingSpec bracketed(RingSpec::Kind kind, std::vector<std::uint64_t> params) {
        expect("(");
        RingSpec base = parse_spec();
        expect(")");
        return RingSpec::unary(kind, std::move(params), std::move(base));
    }

    RingSpec parse_term() {
        using K = RingSpec::Kind;
        skip_ws();
        const std::size_t start = pos_;
        if (accept("skewT")) {
            const std::uint64_t k = integer(1, "size");
            expect("(");
            RingSpec base = parse_spec();
            expect(",");
            skip_ws();
            const std::size_t endo_pos = pos_;
            RingSpec::Endo endo;
            if (accept("id")) {
                endo = RingSpec::Endo::Identity;
            } else if (accept("swap")) {
                endo = RingSpec::Endo::Swap;
                if (base.kind != K::Product || base.children.size() != 2)
                    throw ParseError("swap requires a product of two rings", endo_pos);
                if (!(base.children[0] == base.children[1]))
                    throw ParseError("swap requires identical factors", endo_pos);
            } else {
                throw ParseError("expected 'id' or 'swap'", endo_pos);
            }
            expect(")");
            RingSpec spec = RingSpec::unary(K::SkewTriangular, {k}, std::move(base));
            spec.endo = endo;
            return spec;
        }
        if (accept("Snm")) {
            const std::uint64_t n = integer(1, "n");
            const std::uint64_t m = integer(1, "m");
            return bracketed(K::Snm, {n, m});
        }
        if (accept("Tnm")) {
            const std::uint64_t n = integer(1, "n");
            const std::uint64_t m = integer(1, "m");
            return bracketed(K::Tnm, {n, m});
        }
        if (accept("TE")) return bracketed(K::TrivExt, {});
        if (accept("GR")) {
            expect("(");
            RingSpec base = parse_spec();
            expect(",");
            GroupSpec group = parse_group();
            expect(")");
            RingSpec spec = RingSpec::unary(K::GroupRing, {}, std::move(base));
            spec.group = std::move(group);
            return spec;
        }
        if (accept("Z")) return RingSpec::zmod(integer(1, "modulus"));
        if (accept("M")) return bracketed(K::Matrix, {integer(1, "size")});
        if (accept("T")) return bracketed(K::Triangular, {integer(1, "size")});
        if (accept("S")) return bracketed(K::SnDiag, {integer(1, "size")});
        if (accept("U")) return bracketed(K::Un, {integer(2, "size")});
        throw ParseError("expected a ring term", start);
    }

    GroupSpec parse_group() {
        GroupSpec group;
        if (accept("D4")) {
            group.kind = GroupSpec::Kind::D4;
            return group;
        }
        if (accept("Q8")) {
            group.kind = GroupSpec::Kind::Q8;
            return group;
        }
        expect("C");
        group.cyclic_orders.push_back(integer(1, "group order"));
        while (accept("x")) {
            expect("C");
            group.cyclic_orders.push_back(integer(1, "group order"));
        }
        return group;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string print_group(const GroupSpec& g) {
    switch (g.kind) {
        case GroupSpec::Kind::D4: return "D4";
        case GroupSpec::Kind::Q8: return "Q8";
        case GroupSpec::Kind::Cyclic: break;
    }
    std::string out;
    for (const auto n : g.cyclic_orders) {
        if (!out.empty()) out += "x";
        out += "C" + std::to_string(n);
    }
    return out;
}

}  // namespace

std::uint64_t GroupSpec::order() const {
    if (kind != Kind::Cyclic) return 8;
    std::uint64_t n = 1;
    for (const auto c : cyclic_orders) n = mul_sat(n, c);
    return n;
}

FiniteGroup GroupSpec::build() const {
    switch (kind) {
        case Kind::D4: return FiniteGroup::dihedral8();
        case Kind::Q8: return FiniteGroup::quaternion8();
        case Kind::Cyclic: break;
    }
    if (cyclic_orders.empty()) throw InvalidConstructionError("empty group spec");
    FiniteGroup g = FiniteGroup::cyclic(static_cast<FiniteGroup::Index>(cyclic_orders.front()));
    for (std::size_t i = 1; i < cyclic_orders.size(); ++i)
        g = FiniteGroup::direct_product(g, FiniteGroup::cyclic(static_cast<FiniteGroup::Index>(cyclic_orders[i])));
    return g;
}

RingSpec RingSpec::zmod(std::uint64_t n) {
    RingSpec s;
    s.kind = Kind::Zmod;
    s.params = {n};
    return s;
}

RingSpec RingSpec::product(std::vector<RingSpec> factors) {
    RingSpec s;
    s.kind = Kind::Product;
    s.children = std::move(factors);
    return s;
}

RingSpec RingSpec::unary(Kind kind, std::vector<std::uint64_t> params, RingSpec base) {
    RingSpec s;
    s.kind = kind;
    s.params = std::move(params);
    s.children.push_back(std::move(base));
    return s;
}

RingSpec RingSpec::formal_triangular(std::uint64_t a, std::uint64_t b, std::uint64_t k) {
    RingSpec s;
    s.kind = Kind::FormalTri;
    s.params = {k};
    s.children = {zmod(a), zmod(b)};
    return s;
}

RingSpec RingSpec::quotient(RingSpec parent, IdealKind ideal) {
    RingSpec s = unary(Kind::Quotient, {}, std::move(parent));
    s.ideal = ideal;
    return s;
}

RingSpec RingSpec::corner_of(RingSpec parent, ElementForm idempotent) {
    RingSpec s = unary(Kind::Corner, {}, std::move(parent));
    s.corner = std::move(idempotent);
    return s;
}

RingSpec parse_spec(std::string_view text) { return Parser(text).parse(); }

std::string print_spec(const RingSpec& s) {
    using K = RingSpec::Kind;
    auto inner = [&](std::size_t i = 0) { return print_spec(s.children.at(i)); };
    auto num = [&](std::size_t i) { return std::to_string(s.params.at(i)); };
    switch (s.kind) {
        case K::Zmod: return "Z" + num(0);
        case K::Product: {
            std::string out;
            for (std::size_t i = 0; i < s.children.size(); ++i) out += (i == 0 ? "" : "x") + inner(i);
            return out;
        }
        case K::Matrix: return "M" + num(0) + "(" + inner() + ")";
        case K::Triangular: return "T" + num(0) + "(" + inner() + ")";
        case K::SnDiag: return "S" + num(0) + "(" + inner() + ")";
        case K::Snm: return "Snm" + num(0) + " " + num(1) + "(" + inner() + ")";
        case K::Tnm: return "Tnm" + num(0) + " " + num(1) + "(" + inner() + ")";
        case K::Un: return "U" + num(0) + "(" + inner() + ")";
        case K::TrivExt: return "TE(" + inner() + ")";
        case K::GroupRing: return "GR(" + inner() + "," + print_group(s.group) + ")";
        case K::SkewTriangular:
            return "skewT" + num(0) + "(" + inner() + "," + (s.endo == RingSpec::Endo::Swap ? "swap" : "id") + ")";
        case K::FormalTri: return "FT(" + inner(0) + "," + inner(1) + ",Z" + num(0) + ")";
        case K::Quotient: return inner() + (s.ideal == RingSpec::IdealKind::Jacobson ? "/J" : "/Delta");
        case K::Corner: return "corner(" + inner() + "," + to_string(s.corner) + ")";
    }
    return "?";
}

std::uint64_t estimated_order(const RingSpec& s) {
    using K = RingSpec::Kind;
    auto base = [&] { return estimated_order(s.children.at(0)); };
    auto p = [&](std::size_t i) { return s.params.at(i); };
    switch (s.kind) {
        case K::Zmod: return p(0);
        case K::Product: {
            std::uint64_t n = 1;
            for (const auto& c : s.children) n = mul_sat(n, estimated_order(c));
            return n;
        }
        case K::Matrix: return saturating_power(base(), mul_sat(p(0), p(0)));
        case K::Triangular: return saturating_power(base(), mul_sat(p(0), p(0) + 1) / 2);
        case K::SnDiag: return saturating_power(base(), 1 + mul_sat(p(0), p(0) - 1) / 2);
        case K::Snm: return saturating_power(base(), mul_sat(p(0), p(1)));
        case K::Tnm: return saturating_power(base(), p(0) + p(1) - 1);
        case K::Un: return saturating_power(base(), 2 * p(0) - 2);
        case K::TrivExt: return saturating_power(base(), 2);
        case K::GroupRing: return saturating_power(base(), s.group.order());
        case K::SkewTriangular: return saturating_power(base(), p(0));
        case K::FormalTri:
            return mul_sat(mul_sat(estimated_order(s.children.at(0)), estimated_order(s.children.at(1))), p(0));
        case K::Quotient:
        case K::Corner: return base();
    }
    return 0;
}

RingHandle build_ring(const RingSpec& s, const Budget& budget) {
    using K = RingSpec::Kind;
    const std::uint64_t order = estimated_order(s);
    if (order > budget.max_order)
        throw BudgetExceededError(print_spec(s) + " has order " +
                                  (order == std::numeric_limits<std::uint64_t>::max() ? std::string("> 2^64")
                                                                                      : std::to_string(order)) +
                                  ", budget is " + std::to_string(budget.max_order));
    auto child = [&](std::size_t i = 0) { return build_ring(s.children.at(i), budget); };
    auto size = [&](std::size_t i = 0) { return static_cast<unsigned>(s.params.at(i)); };
    switch (s.kind) {
        case K::Zmod: return make_zmod(s.params.at(0), budget);
        case K::Product: {
            std::vector<RingHandle> factors;
            for (std::size_t i = 0; i < s.children.size(); ++i) factors.push_back(child(i));
            return make_product(factors, budget);
        }
        case K::Matrix: return make_matrix(child(), size(), budget);
        case K::Triangular: return make_upper_triangular(child(), size(), budget);
        case K::SnDiag: return make_sn_constant_diag(child(), size(), budget);
        case K::Snm: return make_snm(child(), size(0), size(1), budget);
        case K::Tnm: return make_tnm(child(), size(0), size(1), budget);
        case K::Un: return make_un(child(), size(), budget);
        case K::TrivExt: return make_trivial_extension(child(), budget);
        case K::GroupRing: return make_group_ring(child(), s.group.build(), budget);
        case K::SkewTriangular: {
            RingHandle base = child();
            const Endomorphism alpha =
                s.endo == RingSpec::Endo::Swap ? Endomorphism::swap(base) : Endomorphism::identity(base);
            return make_skew_triangular(base, size(), alpha, budget);
        }
        case K::FormalTri:
            return make_formal_triangular(
                BimoduleSpec::reduction(child(0), child(1), static_cast<Index>(s.params.at(0))), budget);
        case K::Quotient: {
            RingHandle parent = child();
            if (s.ideal == RingSpec::IdealKind::Augmentation) return make_quotient(parent, augmentation_ideal(parent));
            const auto profile = Profile::compute(parent);
            return make_quotient(parent, profile->jacobson());
        }
        case K::Corner: {
            RingHandle parent = child();
            return make_corner(parent, parent->encode(s.corner));
        }
    }
    throw InvalidConstructionError("unknown ring spec kind");
}

}  // namespace nusring
