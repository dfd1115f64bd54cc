#include "nusring/predicates.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <thread>

#include "nusring/errors.hpp"

namespace nusring {

namespace {

template <class Pred>
Verdict all_elements(const Profile& p, Pred&& ok) {
    for (Index a = 0; a < p.ring().order(); ++a)
        if (!ok(a)) return Verdict{false, a};
    return Verdict{};
}

template <class Pred>
Verdict all_non_units(const Profile& p, Pred&& ok) {
    return all_elements(p, [&](Index a) { return p.is_unit(a) || ok(a); });
}

auto decomposes(const Profile& p, DecompKind kind, bool strong) {
    return [&p, kind, strong](Index a) { return decompose(p, a, kind, strong).has_value(); };
}

}  // namespace

Verdict strongly_nus_criterion(const Profile& p) {
    const Ring& r = p.ring();
    return all_non_units(p, [&](Index a) {
        const Index a2 = r.mul(a, a);
        return p.is_nilpotent(r.sub(r.mul(a2, a2), a2));
    });
}

Verdict strongly_nus_search(const Profile& p) {
    return all_non_units(p, decomposes(p, DecompKind::SquareNilClean, true));
}

Verdict nus_nil_clean(const Profile& p) { return all_non_units(p, decomposes(p, DecompKind::SquareNilClean, false)); }

Verdict strongly_square_nil_clean(const Profile& p) {
    return all_elements(p, decomposes(p, DecompKind::SquareNilClean, true));
}

Verdict square_nil_clean(const Profile& p) { return all_elements(p, decomposes(p, DecompKind::SquareNilClean, false)); }

Verdict strongly_nil_clean(const Profile& p) { return all_elements(p, decomposes(p, DecompKind::NilClean, true)); }

Verdict nil_clean(const Profile& p) { return all_elements(p, decomposes(p, DecompKind::NilClean, false)); }

Verdict gsnc(const Profile& p) { return all_non_units(p, decomposes(p, DecompKind::NilClean, true)); }

Verdict strongly_clean(const Profile& p) { return all_elements(p, decomposes(p, DecompKind::Clean, true)); }

Verdict clean(const Profile& p) { return all_elements(p, decomposes(p, DecompKind::Clean, false)); }

Verdict strongly_pi_regular(const Profile& p) {
    return all_elements(p, [&](Index a) { return is_strongly_pi_regular_element(p.ring(), a); });
}

Verdict units_square_unipotent(const Profile& p) {
    const Ring& r = p.ring();
    return all_elements(p, [&](Index a) { return !p.is_unit(a) || p.is_nilpotent(r.sub(r.mul(a, a), r.one())); });
}

Verdict local(const Profile& p) {
    if (is_local(p)) return Verdict{};
    return Verdict{false, locality_witness(p)};
}

Verdict trivial_idempotents(const Profile& p) {
    const Ring& r = p.ring();
    for (const Index e : p.idempotents())
        if (e != r.zero() && e != r.one()) return Verdict{false, e};
    return Verdict{};
}

Verdict commutative(const Profile& p) {
    for (Index a = 0; a < p.ring().order(); ++a)
        if (!p.is_central(a)) return Verdict{false, a};
    return Verdict{};
}

const std::vector<std::string_view>& predicate_names() {
    static const std::vector<std::string_view> names{
        "strongly_nus",   "strongly_nus_criterion", "nus",   "strongly_square_nil",
        "square_nil",     "strongly_nil_clean",     "nil_clean", "gsnc",
        "strongly_clean", "clean",                  "strongly_pi_regular", "units_square_unipotent",
        "local",          "trivial_idempotents",    "commutative",
    };
    return names;
}

Verdict evaluate_predicate(const Profile& p, std::string_view name) {
    using Fn = Verdict (*)(const Profile&);
    static constexpr std::array<std::pair<std::string_view, Fn>, 15> table{{
        {"strongly_nus", &strongly_nus_search},
        {"strongly_nus_criterion", &strongly_nus_criterion},
        {"nus", &nus_nil_clean},
        {"strongly_square_nil", &strongly_square_nil_clean},
        {"square_nil", &square_nil_clean},
        {"strongly_nil_clean", &strongly_nil_clean},
        {"nil_clean", &nil_clean},
        {"gsnc", &gsnc},
        {"strongly_clean", &strongly_clean},
        {"clean", &clean},
        {"strongly_pi_regular", &strongly_pi_regular},
        {"units_square_unipotent", &units_square_unipotent},
        {"local", &local},
        {"trivial_idempotents", &trivial_idempotents},
        {"commutative", &commutative},
    }};
    for (const auto& [key, fn] : table)
        if (key == name) return fn(p);
    throw InvalidConstructionError("unknown predicate " + std::string(name));
}

const Verdict& RingClassReport::at(std::string_view name) const {
    for (const auto& [key, verdict] : entries)
        if (key == name) return verdict;
    throw InvalidConstructionError("predicate " + std::string(name) + " not in report");
}

std::optional<std::string> RingClassReport::chain_violation() const {
    static constexpr std::array<std::string_view, 5> chain{"strongly_nil_clean", "strongly_square_nil",
                                                           "strongly_nus", "strongly_clean", "clean"};
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (at(chain[i]).value && !at(chain[i + 1]).value)
            return std::string(chain[i]) + " holds but " + std::string(chain[i + 1]) + " fails";
    return std::nullopt;
}

RingClassReport classify(const Profile& p, unsigned workers) {
    const auto& names = predicate_names();
    RingClassReport report;
    report.entries.resize(names.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next.fetch_add(1); i < names.size(); i = next.fetch_add(1))
            report.entries[i] = {std::string(names[i]), evaluate_predicate(p, names[i])};
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < std::min<std::size_t>(workers, names.size()); ++w) pool.emplace_back(work);
    }
    if (auto v = report.chain_violation()) throw InvariantViolation(p.ring().label() + ": " + *v);
    return report;
}

}  // namespace nusring
