#include "nusring/analysis.hpp"

#include <algorithm>

#include "nusring/constructions.hpp"
#include "nusring/errors.hpp"
#include "nusring/kernels.hpp"

namespace nusring {

namespace {

/// An additive subgroup grown one generator at a time.
class AdditiveSpan {
public:
    explicit AdditiveSpan(const Ring& ring) : ring_(ring), member_(ring.order(), 0) {
        member_[ring.zero()] = 1;
        elements_.push_back(ring.zero());
    }

    bool contains(Index x) const { return member_[x] != 0; }
    std::size_t size() const noexcept { return elements_.size(); }
    const std::vector<Index>& elements() const noexcept { return elements_; }

    /// H := H + <g>. Returns false if g was already in H. Stops early once size exceeds `cap`.
    bool extend(Index g, std::size_t cap = static_cast<std::size_t>(-1)) {
        if (member_[g]) return false;
        const std::size_t base = elements_.size();
        for (Index m = g; !member_[m]; m = ring_.add(m, g)) {
            for (std::size_t i = 0; i < base; ++i) {
                const Index x = ring_.add(elements_[i], m);
                member_[x] = 1;
                elements_.push_back(x);
            }
            if (elements_.size() > cap) break;
        }
        return true;
    }

private:
    const Ring& ring_;
    std::vector<std::uint8_t> member_;
    std::vector<Index> elements_;
};

}  // namespace

std::vector<Index> additive_generators(const Ring& ring) {
    AdditiveSpan span(ring);
    std::vector<Index> gens;
    for (Index a = 0; a < ring.order() && span.size() < ring.order(); ++a)
        if (span.extend(a)) gens.push_back(a);
    return gens;
}

// ---------------------------------------------------------------------------------------
// Ideal

Ideal Ideal::from_elements(RingHandle ring, std::vector<Index> elements, std::string label) {
    const Ring& r = *ring;
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    Ideal ideal;
    ideal.member_.assign(r.order(), 0);
    for (const Index x : elements) {
        if (x >= r.order()) throw InvalidConstructionError(label + ": element out of range");
        ideal.member_[x] = 1;
    }
    if (!ideal.member_[r.zero()]) throw InvalidConstructionError(label + " does not contain zero");

    AdditiveSpan span(r);
    for (const Index x : elements) {
        span.extend(x, elements.size());
        if (span.size() > elements.size())
            throw InvalidConstructionError(label + " is not closed under addition");
    }
    // Closure under products with additive generators of R gives closure under all of R.
    for (const Index g : additive_generators(r))
        for (const Index x : elements)
            if (!ideal.member_[r.mul(g, x)] || !ideal.member_[r.mul(x, g)])
                throw InvalidConstructionError(label + " is not a two-sided ideal");
    ideal.ring_ = std::move(ring);
    ideal.elements_ = std::move(elements);
    ideal.label_ = std::move(label);
    return ideal;
}

// ---------------------------------------------------------------------------------------
// Profile

std::shared_ptr<const Profile> Profile::compute(RingHandle ring) {
    auto p = std::shared_ptr<Profile>(new Profile());
    p->ring_ = ring;
    const Ring& r = *ring;
    const Index n = r.order();
    p->inverse_.assign(n, kNone);
    p->nil_index_.assign(n, 0);
    p->idempotent_flag_.assign(n, 0);
    p->square_idempotent_flag_.assign(n, 0);

    OrbitWalker walker(r);
    for (Index a = 0; a < n; ++a) {
        const PowerOrbit orbit = walker(a);
        if (const auto k = orbit.exponent_of(r.one())) {
            p->inverse_[a] = *k == 1 ? r.one() : orbit.at(*k - 1);
            p->units_.push_back(a);
        }
        if (const auto k = orbit.exponent_of(r.zero())) {
            p->nil_index_[a] = static_cast<std::uint32_t>(*k);
            p->nilpotents_.push_back(a);
        }
        const Index a2 = r.mul(a, a);
        if (a2 == a) {
            p->idempotent_flag_[a] = 1;
            p->idempotents_.push_back(a);
        }
        if (r.mul(a2, a2) == a2) {
            p->square_idempotent_flag_[a] = 1;
            p->square_idempotents_.push_back(a);
        }
    }

    p->generators_ = nusring::additive_generators(r);
    p->central_flag_.assign(n, 0);
    if (r.has_tables()) {
        std::vector<Index> row(n), column(n);
        for (Index a = 0; a < n; ++a) {
            r.mul_row(a, row);
            r.mul_column(a, column);
            if (kernels::first_mismatch(row, column) == kernels::npos) p->central_flag_[a] = 1;
        }
    } else {
        for (Index a = 0; a < n; ++a)
            p->central_flag_[a] = std::all_of(p->generators_.begin(), p->generators_.end(),
                                              [&](Index g) { return r.mul(a, g) == r.mul(g, a); });
    }
    for (Index a = 0; a < n; ++a)
        if (p->central_flag_[a]) p->center_.push_back(a);

    p->jacobson_.emplace(jacobson_radical(*p));
    p->jacobson_flag_.assign(n, 0);
    for (const Index x : p->jacobson_->elements()) p->jacobson_flag_[x] = 1;
    return p;
}

Ideal jacobson_radical(const Profile& profile) {
    const Ring& r = profile.ring();
    const Index n = r.order();
    // flag[y] != 0 iff 1 - y is a unit
    std::vector<std::uint32_t> flag(n);
    for (Index y = 0; y < n; ++y) flag[y] = profile.is_unit(r.sub(r.one(), y)) ? 1 : 0;

    // J is an additive subgroup: grow it from accepted elements, and drop the whole coset
    // x + H of a rejected x.
    AdditiveSpan span(r);
    std::vector<std::uint8_t> rejected(n, 0);
    std::vector<Index> column(r.has_tables() ? n : 0);
    for (Index x = 0; x < n; ++x) {
        if (!flag[x] || rejected[x] || span.contains(x)) continue;  // r = 1 first
        bool inside = true;
        if (r.has_tables()) {
            r.mul_column(x, column);
            inside = kernels::first_unflagged(column, flag) == kernels::npos;
        } else {
            for (Index s = 0; s < n && inside; ++s) inside = flag[r.mul(s, x)] != 0;
        }
        if (inside) {
            span.extend(x);
        } else {
            for (const Index h : span.elements()) rejected[r.add(x, h)] = 1;
        }
    }
    try {
        return Ideal::from_elements(profile.ring_handle(), span.elements(), "J");
    } catch (const InvalidConstructionError& e) {
        throw InvariantViolation(std::string("Jacobson radical of ") + r.label() + " is not an ideal: " + e.what());
    }
}

std::optional<Index> locality_witness(const Profile& profile) {
    const Ring& r = profile.ring();
    std::vector<Index> non_units;
    for (Index a = 0; a < r.order(); ++a)
        if (!profile.is_unit(a)) non_units.push_back(a);
    for (const Index a : non_units)
        for (const Index b : non_units)
            if (profile.is_unit(r.add(a, b))) return a;
    return std::nullopt;
}

bool is_local(const Profile& profile) {
    const Ring& r = profile.ring();
    std::vector<Index> non_units;
    for (Index a = 0; a < r.order(); ++a)
        if (!profile.is_unit(a)) non_units.push_back(a);
    if (non_units.empty()) return true;
    AdditiveSpan span(r);
    for (const Index a : non_units) {
        span.extend(a, non_units.size());
        if (span.size() > non_units.size()) return false;
    }
    try {
        (void)Ideal::from_elements(profile.ring_handle(), non_units, "non-units");
    } catch (const InvalidConstructionError& e) {
        throw InvariantViolation("non-units of " + r.label() + " are additively closed but not an ideal: " +
                                 e.what());
    }
    return true;
}

bool has_only_trivial_idempotents(const Profile& profile) {
    const Ring& r = profile.ring();
    return std::all_of(profile.idempotents().begin(), profile.idempotents().end(),
                       [&](Index e) { return e == r.zero() || e == r.one(); });
}

// ---------------------------------------------------------------------------------------
// Ideals

Ideal ideal_generated(RingHandle ring, const std::vector<Index>& generators, std::string label) {
    const Ring& r = *ring;
    const std::vector<Index> ring_gens = additive_generators(r);
    AdditiveSpan span(r);
    for (const Index g : generators) {
        if (g >= r.order()) throw InvalidConstructionError(label + ": generator out of range");
        span.extend(g);
    }
    // Every element entering the span is multiplied by the additive generators of R on both sides.
    for (std::size_t processed = 0; processed < span.size(); ++processed) {
        const Index x = span.elements()[processed];
        for (const Index s : ring_gens) {
            span.extend(r.mul(s, x));
            span.extend(r.mul(x, s));
        }
    }
    return Ideal::from_elements(std::move(ring), span.elements(), std::move(label));
}

Ideal ideal_power(const Ideal& ideal, unsigned n) {
    if (n == 0) throw InvalidConstructionError("ideal powers start at 1");
    if (n == 1) return ideal;
    const Ring& r = *ideal.ring();
    std::vector<std::uint8_t> seen(r.order(), 0);
    std::vector<Index> products = ideal.elements();
    for (unsigned k = 1; k < n; ++k) {
        std::fill(seen.begin(), seen.end(), 0);
        std::vector<Index> next;
        for (const Index p : products)
            for (const Index x : ideal.elements()) {
                const Index q = r.mul(p, x);
                if (!seen[q]) {
                    seen[q] = 1;
                    next.push_back(q);
                }
            }
        products = std::move(next);
    }
    return ideal_generated(ideal.ring(), products, ideal.label() + "^" + std::to_string(n));
}

bool is_nil_ideal(const Profile& profile, const Ideal& ideal) {
    if (ideal.ring().get() != &profile.ring()) throw ForeignElementError("ideal belongs to a different ring");
    std::vector<std::uint32_t> nil(profile.ring().order());
    for (Index a = 0; a < nil.size(); ++a) nil[a] = profile.is_nilpotent(a) ? 1 : 0;
    return kernels::first_unflagged(ideal.elements(), nil) == kernels::npos;
}

Index augmentation(const Ring& group_ring, Index x) {
    const auto* data = group_ring.construction<GroupRingData>();
    if (data == nullptr) throw InvalidConstructionError(group_ring.label() + " is not a group ring");
    if (x >= group_ring.order()) throw ForeignElementError("element out of range");
    const Ring& base = *data->coefficients;
    Index sum = base.zero();
    for (Index g = 0; g < data->group.order(); ++g) {
        sum = base.add(sum, x % base.order());
        x /= base.order();
    }
    return sum;
}

Ideal augmentation_ideal(RingHandle group_ring) {
    const auto* data = group_ring->construction<GroupRingData>();
    if (data == nullptr) throw InvalidConstructionError(group_ring->label() + " is not a group ring");
    std::vector<Index> kernel;
    for (Index x = 0; x < group_ring->order(); ++x)
        if (augmentation(*group_ring, x) == data->coefficients->zero()) kernel.push_back(x);
    return Ideal::from_elements(std::move(group_ring), std::move(kernel), "Delta");
}

RingHandle make_quotient(RingHandle parent, const Ideal& ideal) {
    if (ideal.ring().get() != parent.get()) throw ForeignElementError("ideal belongs to a different ring");
    return make_quotient(std::move(parent), ideal.elements(), ideal.label());
}

// ---------------------------------------------------------------------------------------
// Decompositions

std::string_view to_string(DecompKind kind) noexcept {
    switch (kind) {
        case DecompKind::Clean: return "clean";
        case DecompKind::NilClean: return "nil-clean";
        case DecompKind::SquareNilClean: return "square-nil-clean";
    }
    return "?";
}

namespace {

template <class Visit>
void each_decomposition(const Profile& profile, Index a, DecompKind kind, Visit&& visit) {
    const Ring& r = profile.ring();
    if (a >= r.order()) throw ForeignElementError("element out of range");
    const auto& candidates =
        kind == DecompKind::SquareNilClean ? profile.square_idempotents() : profile.idempotents();
    for (const Index e : candidates) {
        const Index n = r.sub(a, e);
        const bool ok = kind == DecompKind::Clean ? profile.is_unit(n) : profile.is_nilpotent(n);
        if (!ok) continue;
        if (!visit(DecompWitness{kind, a, e, n, r.mul(e, n) == r.mul(n, e)})) return;
    }
}

}  // namespace

std::optional<DecompWitness> decompose(const Profile& profile, Index a, DecompKind kind, bool strong) {
    std::optional<DecompWitness> found;
    each_decomposition(profile, a, kind, [&](const DecompWitness& w) {
        if (strong && !w.commuting) return true;
        found = w;
        return false;
    });
    return found;
}

std::vector<DecompWitness> decompositions(const Profile& profile, Index a, DecompKind kind) {
    std::vector<DecompWitness> out;
    each_decomposition(profile, a, kind, [&](const DecompWitness& w) {
        out.push_back(w);
        return true;
    });
    return out;
}

DecompWitness clean_witness_from_square(const Profile& profile, const DecompWitness& w) {
    const Ring& r = profile.ring();
    if (w.kind != DecompKind::SquareNilClean || !w.commuting)
        throw InvalidConstructionError("expected a strongly square-nil-clean witness");
    const Index e2 = r.mul(w.e, w.e);
    if (r.mul(e2, e2) != e2 || !profile.is_nilpotent(w.n) || r.add(w.e, w.n) != w.a)
        throw InvalidConstructionError("the input is not a square-nil-clean decomposition");
    const Index f = r.sub(r.one(), e2);
    const Index u = r.add(r.add(r.sub(w.e, r.one()), e2), w.n);
    auto fail = [&](const std::string& what) {
        return InvariantViolation("clean witness for " + r.format(w.a) + " in " + r.label() + ": " + what);
    };
    if (r.mul(f, f) != f) throw fail(r.format(f) + " is not idempotent");
    if (!profile.is_unit(u)) throw fail(r.format(u) + " is not a unit");
    if (r.add(f, u) != w.a) throw fail("the parts do not sum to the element");
    const bool commuting = r.mul(f, u) == r.mul(u, f);
    if (!commuting) throw fail("the parts do not commute");
    return DecompWitness{DecompKind::Clean, w.a, f, u, commuting};
}

std::optional<PiRegularWitness> strongly_pi_regular_witness(const Ring& ring, Index a) {
    if (a >= ring.order()) throw ForeignElementError("element out of range");
    // Candidate from the power orbit: a^s = a^(s+L) = a^(s+1) a^(L-1).
    const PowerOrbit orbit = ring.power_orbit(a);
    const std::uint64_t s = orbit.cycle_start;
    const Index r = orbit.cycle_length == 1 ? ring.one() : orbit.at(orbit.cycle_length - 1);
    if (orbit.at(s) == ring.mul(orbit.at(s + 1), r)) return PiRegularWitness{s, r};
    // The condition is monotone in n, so n = order decides the rest.
    const std::uint64_t n = ring.order();
    const Index lhs = ring.pow(a, n);
    std::vector<Index> row(ring.order());
    ring.mul_row(ring.pow(a, n + 1), row);
    const std::size_t pos = kernels::find_first(row, lhs);
    if (pos == kernels::npos) return std::nullopt;
    return PiRegularWitness{n, static_cast<Index>(pos)};
}

}  // namespace nusring
