#include "nusring/ring.hpp"

#include <atomic>
#include <random>
#include <sstream>

#include "nusring/errors.hpp"

namespace nusring {

std::string_view to_string(CheckStatus status) noexcept {
    switch (status) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skip: return "skip";
    }
    return "?";
}

namespace {

std::uint64_t next_ring_id() {
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace

Index PowerOrbit::at(std::uint64_t k) const {
    if (k == 0) throw std::invalid_argument("PowerOrbit::at requires k >= 1");
    if (k <= sequence.size()) return sequence[k - 1];
    const std::uint64_t offset = (k - cycle_start) % cycle_length;
    return sequence[cycle_start - 1 + offset];
}

std::optional<std::size_t> PowerOrbit::exponent_of(Index x) const {
    for (std::size_t i = 0; i < sequence.size(); ++i)
        if (sequence[i] == x) return i + 1;
    return std::nullopt;
}

RingHandle Ring::create(std::string label, Index order, Index zero, Index one, RingOps ops,
                        std::any construction) {
    if (order == 0) throw InvalidConstructionError("a ring must have at least one element");
    if (zero >= order || one >= order) throw InvalidConstructionError("zero/one index out of range");
    std::shared_ptr<Ring> ring(new Ring());
    ring->label_ = std::move(label);
    ring->order_ = order;
    ring->zero_ = zero;
    ring->one_ = one;
    ring->id_ = next_ring_id();
    ring->ops_ = std::move(ops);
    ring->construction_ = std::move(construction);
    if (order <= kTableThreshold) {
        const std::size_t n = order;
        ring->add_table_.resize(n * n);
        ring->mul_table_.resize(n * n);
        ring->neg_table_.resize(n);
        for (Index a = 0; a < order; ++a) {
            ring->neg_table_[a] = ring->ops_.neg(a);
            for (Index b = 0; b < order; ++b) {
                ring->add_table_[a * n + b] = ring->ops_.add(a, b);
                ring->mul_table_[a * n + b] = ring->ops_.mul(a, b);
            }
        }
    }
    return ring;
}

RingHandle Ring::from_tables(std::string label, Index order, std::vector<Index> add_table,
                             std::vector<Index> mul_table, std::vector<Index> neg_table, Index zero, Index one) {
    const std::size_t n = order;
    if (order == 0 || add_table.size() != n * n || mul_table.size() != n * n || neg_table.size() != n)
        throw InvalidConstructionError("operation table sizes do not match the order");
    for (const auto* table : {&add_table, &mul_table, &neg_table})
        for (const Index v : *table)
            if (v >= order) throw InvalidConstructionError("operation table entry out of range");
    if (zero >= order || one >= order) throw InvalidConstructionError("zero/one index out of range");
    std::shared_ptr<Ring> ring(new Ring());
    ring->label_ = std::move(label);
    ring->order_ = order;
    ring->zero_ = zero;
    ring->one_ = one;
    ring->id_ = next_ring_id();
    ring->add_table_ = std::move(add_table);
    ring->mul_table_ = std::move(mul_table);
    ring->neg_table_ = std::move(neg_table);
    ring->ops_.decode = [](Index a) { return ElementForm::scalar(a); };
    ring->ops_.encode = [order](const ElementForm& f) {
        if (f.shape != ElementForm::Shape::Scalar || f.value < 0 || f.value >= order)
            throw EncodingError("expected an element index below " + std::to_string(order));
        return static_cast<Index>(f.value);
    };
    return ring;
}

Index Ring::pow(Index a, std::uint64_t k) const {
    Index result = one_;
    Index base = a;
    while (k != 0) {
        if (k & 1u) result = mul(result, base);
        k >>= 1;
        if (k != 0) base = mul(base, base);
    }
    return result;
}

Index Ring::integer(std::int64_t k) const {
    const bool negative = k < 0;
    std::uint64_t m = negative ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
    // The additive order of one divides the ring order.
    m %= order_;
    Index result = zero_;
    Index step = one_;
    while (m != 0) {
        if (m & 1u) result = add(result, step);
        m >>= 1;
        if (m != 0) step = add(step, step);
    }
    return negative ? neg(result) : result;
}

Element Ring::element(Index index) const {
    if (index >= order_)
        throw ForeignElementError("element index " + std::to_string(index) + " out of range for " + label_);
    return wrap(index);
}

Index Ring::index_of(const Element& e) const {
    if (e.ring_id() != id_) throw ForeignElementError("element does not belong to " + label_);
    if (e.index() >= order_) throw ForeignElementError("element index out of range for " + label_);
    return e.index();
}

Index Ring::encode(const ElementForm& form) const {
    const Index i = ops_.encode(form);
    if (i >= order_) throw EncodingError("encoding produced an out-of-range index");
    return i;
}

PowerOrbit Ring::power_orbit(Index a) const {
    OrbitWalker walker(*this);
    return walker(a);
}

void Ring::mul_row(Index a, std::span<Index> out) const {
    if (has_tables()) {
        const Index* row = mul_table_.data() + static_cast<std::size_t>(a) * order_;
        std::copy(row, row + order_, out.begin());
        return;
    }
    for (Index b = 0; b < order_; ++b) out[b] = ops_.mul(a, b);
}

void Ring::mul_column(Index b, std::span<Index> out) const {
    if (has_tables()) {
        for (Index r = 0; r < order_; ++r) out[r] = mul_table_[static_cast<std::size_t>(r) * order_ + b];
        return;
    }
    for (Index r = 0; r < order_; ++r) out[r] = ops_.mul(r, b);
}

OrbitWalker::OrbitWalker(const Ring& ring)
    : ring_(ring), stamp_(ring.order(), 0), position_(ring.order(), 0) {}

PowerOrbit OrbitWalker::operator()(Index a) {
    if (++epoch_ == 0) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        epoch_ = 1;
    }
    PowerOrbit orbit;
    Index x = a;
    std::uint32_t k = 1;
    while (stamp_[x] != epoch_) {
        stamp_[x] = epoch_;
        position_[x] = k;
        orbit.sequence.push_back(x);
        x = ring_.mul(x, a);
        ++k;
    }
    orbit.cycle_start = position_[x];
    orbit.cycle_length = k - position_[x];
    return orbit;
}

namespace {

struct AxiomViolation {
    std::string what;
    std::vector<Index> elements;
};

std::optional<AxiomViolation> check_triple(const Ring& r, Index a, Index b, Index c) {
    if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) return AxiomViolation{"additive associativity", {a, b, c}};
    if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
        return AxiomViolation{"multiplicative associativity", {a, b, c}};
    if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)))
        return AxiomViolation{"left distributivity", {a, b, c}};
    if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c)))
        return AxiomViolation{"right distributivity", {a, b, c}};
    return std::nullopt;
}

std::optional<AxiomViolation> check_pair(const Ring& r, Index a, Index b) {
    if (r.add(a, b) != r.add(b, a)) return AxiomViolation{"additive commutativity", {a, b}};
    return std::nullopt;
}

std::optional<AxiomViolation> check_single(const Ring& r, Index a) {
    if (r.add(a, r.zero()) != a || r.add(r.zero(), a) != a) return AxiomViolation{"additive identity", {a}};
    if (r.add(a, r.neg(a)) != r.zero()) return AxiomViolation{"additive inverse", {a}};
    if (r.mul(a, r.one()) != a || r.mul(r.one(), a) != a) return AxiomViolation{"multiplicative identity", {a}};
    return std::nullopt;
}

CheckResult finish(const Ring& ring, const std::optional<AxiomViolation>& violation, std::string note) {
    CheckResult result;
    result.id = "RING_AXIOMS";
    result.instance = ring.label();
    result.note = std::move(note);
    if (!violation) {
        result.status = CheckStatus::Pass;
        return result;
    }
    result.status = CheckStatus::Fail;
    result.witness_elements = violation->elements;
    std::ostringstream out;
    out << violation->what << " fails at (";
    for (std::size_t i = 0; i < violation->elements.size(); ++i) {
        if (i != 0) out << ", ";
        out << ring.format(violation->elements[i]);
    }
    out << ")";
    result.witness = out.str();
    return result;
}

}  // namespace

CheckResult verify_ring_axioms(const Ring& ring, const AxiomMode& mode) {
    const Index n = ring.order();
    if (mode.full) {
        const std::uint64_t triples = static_cast<std::uint64_t>(n) * n * n;
        if (triples > mode.max_full_triples)
            throw BudgetExceededError("full axiom check of " + ring.label() + " needs " + std::to_string(triples) +
                                      " triples, budget is " + std::to_string(mode.max_full_triples));
        for (Index a = 0; a < n; ++a)
            if (auto v = check_single(ring, a)) return finish(ring, v, "full");
        for (Index a = 0; a < n; ++a)
            for (Index b = 0; b < n; ++b)
                if (auto v = check_pair(ring, a, b)) return finish(ring, v, "full");
        for (Index a = 0; a < n; ++a)
            for (Index b = 0; b < n; ++b)
                for (Index c = 0; c < n; ++c)
                    if (auto v = check_triple(ring, a, b, c)) return finish(ring, v, "full");
        return finish(ring, std::nullopt, "full: " + std::to_string(triples) + " triples");
    }
    std::mt19937_64 rng(mode.seed);
    std::uniform_int_distribution<Index> pick(0, n - 1);
    for (std::size_t i = 0; i < mode.samples; ++i) {
        const Index a = pick(rng), b = pick(rng), c = pick(rng);
        if (auto v = check_single(ring, a)) return finish(ring, v, "sampled");
        if (auto v = check_pair(ring, a, b)) return finish(ring, v, "sampled");
        if (auto v = check_triple(ring, a, b, c)) return finish(ring, v, "sampled");
    }
    return finish(ring, std::nullopt, "sampled: " + std::to_string(mode.samples) + " triples");
}

CheckResult verify_ring_axioms_auto(const Ring& ring, std::size_t samples, std::uint64_t seed) {
    if (ring.order() <= 64) return verify_ring_axioms(ring, AxiomMode::exhaustive());
    return verify_ring_axioms(ring, AxiomMode::sampled(samples, seed));
}

}  // namespace nusring
