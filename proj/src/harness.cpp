#include "nusring/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "nusring/errors.hpp"
#include "nusring/predicates.hpp"

namespace nusring {

// ---------------------------------------------------------------------------------------
// Catalog

std::vector<RingSpec> Catalog::default_specs() {
    static const char* const texts[] = {
        "Z1",          "Z2",         "Z3",         "Z4",        "Z5",         "Z6",         "Z7",
        "Z8",          "Z9",         "Z10",        "Z12",       "Z2xZ2",      "Z3xZ3",      "Z2xZ3",
        "M2(Z2)",      "M2(Z3)",     "M2(Z4)",     "M3(Z2)",    "T2(Z2)",     "T3(Z2)",     "T2(Z3)",
        "T3(Z3)",      "T2(Z5)",     "S2(Z3)",     "Snm2 2(Z2)", "Tnm1 2(Z2)", "U3(Z2)",     "TE(Z4)",
        "skewT2(Z2xZ2,swap)", "GR(Z2,C2)", "GR(Z2,C4)", "GR(Z4,C2)", "GR(Z2,C2xC2)", "GR(Z2,C3)",
    };
    std::vector<RingSpec> specs;
    for (const char* t : texts) specs.push_back(parse_spec(t));
    specs.push_back(RingSpec::formal_triangular(4, 2, 2));
    return specs;
}

Catalog Catalog::from_specs(const std::vector<RingSpec>& specs, const Budget& budget, std::uint64_t seed) {
    Catalog catalog;
    for (const auto& spec : specs) {
        CatalogEntry entry;
        entry.spec = spec;
        entry.ring = build_ring(spec, budget);
        entry.label = entry.ring->label();
        entry.axioms = verify_ring_axioms_auto(*entry.ring, 10000, seed);
        if (!entry.axioms.passed())
            throw InvariantViolation(entry.label + " fails the ring axioms: " + entry.axioms.witness.value_or(""));
        entry.profile = Profile::compute(entry.ring);
        catalog.entries_.push_back(std::move(entry));
    }
    return catalog;
}

Catalog Catalog::default_catalog(const Budget& budget, std::uint64_t seed) {
    return from_specs(default_specs(), budget, seed);
}

const CatalogEntry* Catalog::find(std::string_view label) const {
    for (const auto& e : entries_)
        if (e.label == label) return &e;
    return nullptr;
}

// ---------------------------------------------------------------------------------------
// Context shared by the tasks of one run

class SuiteContext {
public:
    SuiteContext(const Catalog& catalog, const SuiteConfig& config) : catalog_(catalog), config_(config) {}

    const Catalog& catalog() const noexcept { return catalog_; }
    const SuiteConfig& config() const noexcept { return config_; }
    const Budget& budget() const noexcept { return config_.instance_budget; }
    bool fits(std::uint64_t order) const { return order <= config_.instance_budget.max_order; }

    /// Profile of a derived ring, built once per run and keyed by label.
    ProfileHandle derived(const std::string& label, const std::function<RingHandle()>& build) const {
        {
            std::lock_guard lock(mutex_);
            if (auto it = cache_.find(label); it != cache_.end()) return it->second;
        }
        if (const auto* entry = catalog_.find(label)) return entry->profile;
        ProfileHandle p = Profile::compute(build());
        std::lock_guard lock(mutex_);
        return cache_.emplace(label, std::move(p)).first->second;
    }

private:
    const Catalog& catalog_;
    const SuiteConfig& config_;
    mutable std::mutex mutex_;
    mutable std::map<std::string, ProfileHandle> cache_;
};

namespace {

std::string yes(bool b) { return b ? "true" : "false"; }

CheckResult passed(std::optional<std::string> witness = std::nullopt, std::string note = {}) {
    CheckResult r;
    r.status = CheckStatus::Pass;
    r.witness = std::move(witness);
    r.note = std::move(note);
    return r;
}

CheckResult failed(std::string witness, std::vector<Index> elements = {}) {
    CheckResult r;
    r.status = CheckStatus::Fail;
    r.witness = std::move(witness);
    r.witness_elements = std::move(elements);
    return r;
}

CheckResult skipped(std::string note) {
    CheckResult r;
    r.status = CheckStatus::Skip;
    r.note = std::move(note);
    return r;
}

/// One side of an equivalence, with the element that makes it false.
struct Side {
    std::string name;
    bool value;
    const Ring* ring = nullptr;
    std::optional<Index> witness;
};

Side side(std::string name, const Profile& p, const Verdict& v) { return Side{std::move(name), v.value, &p.ring(), v.witness}; }

std::string describe(const Side& s) {
    std::string out = s.name + "=" + yes(s.value);
    if (!s.value && s.ring != nullptr && s.witness) out += " (fails at " + s.ring->format(*s.witness) + ")";
    return out;
}

CheckResult equivalence(const Side& lhs, const Side& rhs) {
    if (lhs.value == rhs.value) {
        CheckResult r = passed(std::nullopt, lhs.value ? "both sides hold" : "both sides fail");
        r.truth = lhs.value;
        return r;
    }
    std::vector<Index> elements;
    for (const Side* s : {&lhs, &rhs})
        if (!s->value && s->witness) elements.push_back(*s->witness);
    return failed(describe(lhs) + " but " + describe(rhs), std::move(elements));
}

CheckResult implication(const Side& conclusion) {
    if (conclusion.value) return passed();
    std::vector<Index> elements;
    if (conclusion.witness) elements.push_back(*conclusion.witness);
    return failed(describe(conclusion), std::move(elements));
}

Side snus(const Profile& p, const std::string& who = "R") {
    return side(who + " strongly NUS", p, strongly_nus_search(p));
}
Side ssnc(const Profile& p, const std::string& who = "R") {
    return side(who + " strongly square-nil clean", p, strongly_square_nil_clean(p));
}
Side conj(std::string name, std::initializer_list<Side> parts) {
    Side out{std::move(name), true, nullptr, std::nullopt};
    for (const auto& s : parts)
        if (!s.value) {
            out.value = false;
            out.ring = s.ring;
            out.witness = s.witness;
            out.name += " [" + s.name + " fails]";
            break;
        }
    return out;
}

bool integer_in(const Profile& p, std::int64_t k, bool (Profile::*pred)(Index) const) {
    return (p.*pred)(p.ring().integer(k));
}

std::vector<const CatalogEntry*> entries_where(const SuiteContext& ctx,
                                               const std::function<bool(const CatalogEntry&)>& keep) {
    std::vector<const CatalogEntry*> out;
    for (const auto& e : ctx.catalog().entries())
        if (keep(e)) out.push_back(&e);
    return out;
}

/// A task per catalog entry.
std::vector<CheckTask> per_entry(const SuiteContext& ctx, std::function<CheckResult(const CatalogEntry&)> fn,
                                 const std::function<bool(const CatalogEntry&)>& keep = nullptr) {
    std::vector<CheckTask> tasks;
    for (const auto& e : ctx.catalog().entries()) {
        if (keep && !keep(e)) continue;
        tasks.push_back({e.label, [&e, fn] { return fn(e); }});
    }
    return tasks;
}

std::string format_ideal_generator(const Ring& r, Index a) { return "<" + r.format(a) + ">"; }

// Instances (R, I) with I a nonzero nil ideal: J(R), and principal ideals of nilpotents
// in commutative rings.
struct IdealInstance {
    std::string label;
    const CatalogEntry* entry;
    std::vector<Index> generators;  // empty means J(R)
};

std::vector<IdealInstance> nil_ideal_instances(const SuiteContext& ctx) {
    std::vector<IdealInstance> out;
    for (const auto& e : ctx.catalog().entries()) {
        const Profile& p = *e.profile;
        if (p.jacobson().size() > 1) out.push_back({e.label + "/J", &e, {}});
        if (!p.commutative()) continue;
        std::vector<std::vector<Index>> seen{p.jacobson().elements()};
        for (const Index a : p.nilpotents()) {
            if (a == p.ring().zero()) continue;
            const Ideal ideal = ideal_generated(e.ring, {a}, "I");
            if (std::find(seen.begin(), seen.end(), ideal.elements()) != seen.end()) continue;
            seen.push_back(ideal.elements());
            out.push_back({e.label + "/" + format_ideal_generator(p.ring(), a), &e, {a}});
        }
    }
    return out;
}

Ideal instance_ideal(const IdealInstance& inst) {
    if (inst.generators.empty()) return inst.entry->profile->jacobson();
    return ideal_generated(inst.entry->ring, inst.generators, format_ideal_generator(*inst.entry->ring, inst.generators[0]));
}

/// Group rings: the catalog ones plus R G for small catalog R and small groups.
struct GroupRingInstance {
    std::string label;
    RingHandle coefficients;
    ProfileHandle coefficient_profile;
    FiniteGroup group;
    std::function<RingHandle()> build;
};

std::vector<GroupRingInstance> group_ring_pool(const SuiteContext& ctx) {
    std::vector<GroupRingInstance> out;
    std::vector<std::string> labels;
    auto add = [&](GroupRingInstance inst) {
        if (std::find(labels.begin(), labels.end(), inst.label) != labels.end()) return;
        labels.push_back(inst.label);
        out.push_back(std::move(inst));
    };
    const Catalog& cat = ctx.catalog();
    for (const auto& e : cat.entries()) {
        const auto* data = e.ring->construction<GroupRingData>();
        if (data == nullptr) continue;
        const auto* base = cat.find(data->coefficients->label());
        ProfileHandle bp = base != nullptr ? base->profile : Profile::compute(data->coefficients);
        RingHandle ring = e.ring;
        add({e.label, data->coefficients, bp, data->group, [ring] { return ring; }});
    }
    const std::vector<FiniteGroup> groups{
        FiniteGroup::cyclic(2),
        FiniteGroup::cyclic(3),
        FiniteGroup::cyclic(4),
        FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)),
        FiniteGroup::dihedral8(),
        FiniteGroup::quaternion8(),
    };
    constexpr std::uint64_t kPoolMaxOrder = 1024;
    for (const auto& e : cat.entries()) {
        if (e.ring->order() < 2 || e.ring->order() > 9) continue;
        for (const auto& g : groups) {
            const std::uint64_t order = saturating_power(e.ring->order(), g.order());
            if (order > kPoolMaxOrder || !ctx.fits(order)) continue;
            RingHandle base = e.ring;
            Budget budget = ctx.budget();
            add({"GR(" + e.label + "," + g.label() + ")", base, e.profile, g,
                 [base, g, budget] { return make_group_ring(base, g, budget); }});
        }
    }
    return out;
}

std::vector<CheckTask> per_group_ring(const SuiteContext& ctx,
                                      std::function<CheckResult(const SuiteContext&, const GroupRingInstance&)> fn) {
    std::vector<CheckTask> tasks;
    for (auto& inst : group_ring_pool(ctx)) {
        std::string label = inst.label;
        tasks.push_back({std::move(label), [&ctx, inst = std::move(inst), fn] { return fn(ctx, inst); }});
    }
    return tasks;
}

/// p when G is a nontrivial p-group and p is in J(R) (or Nil(R) with `nil`).
std::optional<std::uint32_t> p_group_prime_in(const GroupRingInstance& inst, bool nil) {
    const auto p = inst.group.p_group_prime();
    if (!p) return std::nullopt;
    const Profile& rp = *inst.coefficient_profile;
    const Index pr = rp.ring().integer(*p);
    if (nil ? !rp.is_nilpotent(pr) : !rp.in_jacobson(pr)) return std::nullopt;
    return p;
}

bool ideal_within(const Ideal& inner, const Profile& outer) {
    return std::all_of(inner.elements().begin(), inner.elements().end(), [&](Index x) { return outer.in_jacobson(x); });
}

const std::vector<TheoremCheck>& build_checks();

}  // namespace

const std::vector<TheoremCheck>& theorem_checks() { return build_checks(); }

std::vector<std::string> all_check_ids() {
    std::vector<std::string> ids;
    for (const auto& c : theorem_checks()) ids.push_back(c.id);
    return ids;
}

const TheoremCheck* find_check(std::string_view id) {
    for (const auto& c : theorem_checks())
        if (c.id == id) return &c;
    return nullptr;
}

namespace {

const std::vector<TheoremCheck>& build_checks() {
    static const std::vector<TheoremCheck> checks = [] {
        std::vector<TheoremCheck> c;

        c.push_back({"T7_EQUIV", "the a^4 - a^2 criterion agrees with the decomposition search", true,
                     [](const SuiteContext& ctx) {
                         return per_entry(ctx, [](const CatalogEntry& e) {
                             const Profile& p = *e.profile;
                             return equivalence(side("criterion", p, strongly_nus_criterion(p)),
                                                side("search", p, strongly_nus_search(p)));
                         });
                     }});

        c.push_back({"L2_2_WITNESS", "strongly square-nil-clean witnesses yield strongly clean witnesses", false,
                     [](const SuiteContext& ctx) {
                         return per_entry(ctx, [](const CatalogEntry& e) {
                             const Profile& p = *e.profile;
                             std::size_t count = 0;
                             for (Index a = 0; a < p.ring().order(); ++a) {
                                 const auto w = decompose(p, a, DecompKind::SquareNilClean, true);
                                 if (!w) continue;
                                 try {
                                     (void)clean_witness_from_square(p, *w);
                                 } catch (const InvariantViolation& err) {
                                     return failed(err.what(), {a, w->e, w->n});
                                 }
                                 ++count;
                             }
                             if (count == 0) return skipped("no strongly square-nil-clean element");
                             return passed(std::nullopt, std::to_string(count) + " witnesses transformed");
                         });
                     }});

        c.push_back({"L2_4_PRODUCT", "a product is strongly NUS iff every factor is strongly square-nil clean", true,
                     [](const SuiteContext& ctx) {
                         std::vector<CheckTask> tasks;
                         const auto small = entries_where(ctx, [](const CatalogEntry& e) {
                             return e.ring->order() >= 2 && e.ring->order() <= 9;
                         });
                         for (std::size_t i = 0; i < small.size(); ++i)
                             for (std::size_t j = i; j < small.size(); ++j) {
                                 const CatalogEntry* a = small[i];
                                 const CatalogEntry* b = small[j];
                                 tasks.push_back({a->label + " x " + b->label, [&ctx, a, b] {
                                                      const auto prod = ctx.derived(
                                                          "(" + a->label + ")x(" + b->label + ")",
                                                          [&] { return make_product({a->ring, b->ring}, ctx.budget()); });
                                                      return equivalence(
                                                          snus(*prod, "product"),
                                                          conj("factors strongly square-nil clean",
                                                               {ssnc(*a->profile, a->label), ssnc(*b->profile, b->label)}));
                                                  }});
                             }
                         return tasks;
                     }});

        c.push_back({"P2_12_PI", "strongly NUS rings are strongly pi-regular", false, [](const SuiteContext& ctx) {
                         return per_entry(ctx, [](const CatalogEntry& e) {
                             const Profile& p = *e.profile;
                             if (!strongly_nus_search(p)) return skipped("not strongly NUS");
                             return implication(side("strongly pi-regular", p, strongly_pi_regular(p)));
                         });
                     }});

        c.push_back({"L2_14_CORNER", "corner rings eRe of strongly NUS rings are strongly NUS", false,
                     [](const SuiteContext& ctx) {
                         return per_entry(ctx, [&ctx](const CatalogEntry& e) {
                             const Profile& p = *e.profile;
                             if (!strongly_nus_search(p)) return skipped("not strongly NUS");
                             std::size_t corners = 0;
                             for (const Index idem : p.idempotents()) {
                                 if (idem == p.ring().zero()) continue;
                                 const auto cp = ctx.derived("corner(" + e.label + "," + p.ring().format(idem) + ")",
                                                             [&] { return make_corner(e.ring, idem); });
                                 const Verdict v = strongly_nus_search(*cp);
                                 if (!v) {
                                     std::string w = "eRe for e = " + p.ring().format(idem) + " is not strongly NUS";
                                     if (v.witness) w += " (fails at " + cp->ring().format(*v.witness) + ")";
                                     return failed(std::move(w), {idem});
                                 }
                                 ++corners;
                             }
                             if (corners == 0) return skipped("no nonzero idempotent");
                             return passed(std::nullopt, std::to_string(corners) + " corners");
                         });
                     }});

        c.push_back({"L8_JRAD", "J(R) is nil in strongly NUS rings (always true for finite rings)", false,
                     [](const SuiteContext& ctx) {
                         return per_entry(ctx, [](const CatalogEntry& e) {
                             const Profile& p = *e.profile;
                             if (!strongly_nus_search(p)) return skipped("not strongly NUS");
                             for (const Index x : p.jacobson().elements())
                                 if (!p.is_nilpotent(x)) return failed("J(R) contains " + p.ring().format(x), {x});
                             return passed(std::nullopt, "consistency check");
                         });
                     }});

        c.push_back({"P2_13_QUOT", "R is strongly NUS iff R/I is, for nil ideals I", true, [](const SuiteContext& ctx) {
                         std::vector<CheckTask> tasks;
                         for (auto& inst : nil_ideal_instances(ctx)) {
                             std::string label = inst.label;
                             tasks.push_back({std::move(label), [&ctx, inst] {
                                                  const Profile& p = *inst.entry->profile;
                                                  const Ideal ideal = instance_ideal(inst);
                                                  if (!is_nil_ideal(p, ideal)) return skipped("ideal is not nil");
                                                  const auto q = ctx.derived(
                                                      inst.label, [&] { return make_quotient(inst.entry->ring, ideal); });
                                                  return equivalence(snus(p), snus(*q, "R/I"));
                                              }});
                         }
                         return tasks;
                     }});

        c.push_back({"C10_POWERS", "R/I is strongly NUS iff R/I^n is (n = 2, 3)", true, [](const SuiteContext& ctx) {
                         std::vector<CheckTask> tasks;
                         std::vector<IdealInstance> base;
                         for (const auto& e : ctx.catalog().entries()) {
                             if (e.profile->jacobson().size() > 1) base.push_back({e.label + "/J", &e, {}});
                             const auto* z = e.ring->construction<ZmodData>();
                             if (z == nullptr) continue;
                             for (Index d = 2; d < z->modulus; ++d)
                                 if (z->modulus % d == 0) base.push_back({e.label + "/<" + std::to_string(d) + ">", &e, {d}});
                         }
                         for (const auto& inst : base)
                             for (unsigned n = 2; n <= 3; ++n) {
                                 tasks.push_back({inst.label + "^" + std::to_string(n), [&ctx, inst, n] {
                                                      const Ideal ideal = instance_ideal(inst);
                                                      const Ideal power = ideal_power(ideal, n);
                                                      const auto q1 = ctx.derived(
                                                          inst.label, [&] { return make_quotient(inst.entry->ring, ideal); });
                                                      const auto qn = ctx.derived(inst.label + "^" + std::to_string(n), [&] {
                                                          return make_quotient(inst.entry->ring, power);
                                                      });
                                                      return equivalence(snus(*q1, "R/I"), snus(*qn, "R/I^n"));
                                                  }});
                             }
                         return tasks;
                     }});

        c.push_back({"P2_9_TRI", "T_k(R) is strongly NUS iff R is strongly square-nil clean", true,
                     [](const SuiteContext& ctx) {
                         std::vector<CheckTask> tasks;
                         for (const auto& e : ctx.catalog().entries())
                             for (unsigned k = 2; k <= 3; ++k) {
                                 const std::uint64_t max_base = k == 2 ? 16 : 5;
                                 const std::uint64_t order = saturating_power(e.ring->order(), k * (k + 1) / 2);
                                 if (e.ring->order() > max_base || !ctx.fits(order)) continue;
                                 const std::string label = "T" + std::to_string(k) + "(" + e.label + ")";
                                 tasks.push_back({label, [&ctx, &e, k, label] {
                                                      const auto t = ctx.derived(label, [&] {
                                                          return make_upper_triangular(e.ring, k, ctx.budget());
                                                      });
                                                      return equivalence(snus(*t, "T_k(R)"), ssnc(*e.profile));
                                                  }});
                             }
                         return tasks;
                     }});

        c.push_back({"C2_17_TRIVEXT", "T(R,R) is strongly NUS iff R is", true, [](const SuiteContext& ctx) {
                         std::vector<CheckTask> tasks;
                         for (const auto& e : ctx.catalog().entries()) {
                             if (!ctx.fits(saturating_power(e.ring->order(), 2))) continue;
                             const std::string label = "TE(" + e.label + ")";
                             tasks.push_back({label, [&ctx, &e, label] {
                                                  const auto t = ctx.derived(
                                                      label, [&] { return make_trivial_extension(e.ring, ctx.budget()); });
                                                  return equivalence(snus(*t, "T(R,R)"), snus(*e.profile));
                                              }});
                         }
                         return tasks;
                     }});

        c.push_back({"C2_20_SKEW", "T_k(R,alpha) is strongly NUS iff R is", true, [](const SuiteContext& ctx) {
                         std::vector<CheckTask> tasks;
                         std::vector<std::string> labels;
                         auto add = [&](std::string label, std::function<RingHandle()> build,
                                        std::function<ProfileHandle()> base) {
                             if (std::find(labels.begin(), labels.end(), label) != labels.end()) return;
                             labels.push_back(label);
                             tasks.push_back({label, [&ctx, label, build, base] {
                                                  const auto s = ctx.derived(label, build);
                                                  return equivalence(snus(*s, "T_k(R,alpha)"), snus(*base()));
                                              }});
                         };
                         const Budget budget = ctx.budget();
                         for (const auto& e : ctx.catalog().entries()) {
                             if (const auto* data = e.ring->construction<SkewTriangularData>()) {
                                 RingHandle ring = e.ring;
                                 RingHandle base = data->base;
                                 add(e.label, [ring] { return ring; },
                                     [&ctx, base] { return ctx.derived(base->label(), [base] { return base; }); });
                             }
                         }
                         for (const auto& e : ctx.catalog().entries()) {
                             RingHandle base = e.ring;
                             ProfileHandle bp = e.profile;
                             for (unsigned k = 2; k <= 3; ++k) {
                                 if (k == 3 && e.ring->order() > 16) continue;
                                 if (!ctx.fits(saturating_power(e.ring->order(), k))) continue;
                                 add("skewT" + std::to_string(k) + "(" + e.label + ",id)",
                                     [base, k, budget] {
                                         return make_skew_triangular(base, k, Endomorphism::identity(base), budget);
                                     },
                                     [bp] { return bp; });
                             }
                         }
                         for (const auto& e : ctx.catalog().entries()) {
                             if (e.ring->order() < 2 || e.ring->order() > 9) continue;
                             const std::string key = "(" + e.label + ")x(" + e.label + ")";
                             RingHandle base = e.ring;
                             auto product = [&ctx, key, base, budget] {
                                 return ctx.derived(key, [base, budget] { return make_product({base, base}, budget); });
                             };
                             add("skewT2(" + e.label + "x" + e.label + ",swap)",
                                 [product, budget] {
                                     RingHandle p = product()->ring_handle();
                                     return make_skew_triangular(p, 2, Endomorphism::swap(p), budget);
                                 },
                                 product);
                         }
                         return tasks;
                     }});

        c.push_back({"EX3_29_FAMILY", "S_{n,m}(R), T_{n,m}(R), U_n(R) are NUS-nil clean iff R is", true,
                     [](const SuiteContext& ctx) {
                         struct Shape {
                             const char* name;
                             MatrixShape shape;
                             unsigned n, m;
                             std::uint64_t exponent;
                         };
                         static const Shape shapes[] = {
                             {"Snm", MatrixShape::Snm, 1, 1, 1}, {"Snm", MatrixShape::Snm, 2, 1, 2},
                             {"Snm", MatrixShape::Snm, 1, 2, 2}, {"Snm", MatrixShape::Snm, 2, 2, 4},
                             {"Tnm", MatrixShape::Tnm, 1, 1, 1}, {"Tnm", MatrixShape::Tnm, 1, 2, 2},
                             {"Tnm", MatrixShape::Tnm, 2, 2, 3}, {"U", MatrixShape::Un, 2, 0, 2},
                             {"U", MatrixShape::Un, 3, 0, 4},    {"U", MatrixShape::Un, 4, 0, 6},
                         };
                         std::vector<CheckTask> tasks;
                         for (const auto& e : ctx.catalog().entries()) {
                             if (e.ring->order() > 10) continue;
                             for (const auto& s : shapes) {
                                 if (!ctx.fits(saturating_power(e.ring->order(), s.exponent))) continue;
                                 std::string label = s.shape == MatrixShape::Un
                                                         ? "U" + std::to_string(s.n) + "(" + e.label + ")"
                                                         : std::string(s.name) + std::to_string(s.n) + " " +
                                                               std::to_string(s.m) + "(" + e.label + ")";
                                 tasks.push_back({label, [&ctx, &e, s, label] {
                                                      const auto f = ctx.derived(label, [&]() -> RingHandle {
                                                          switch (s.shape) {
                                                              case MatrixShape::Snm:
                                                                  return make_snm(e.ring, s.n, s.m, ctx.budget());
                                                              case MatrixShape::Tnm:
                                                                  return make_tnm(e.ring, s.n, s.m, ctx.budget());
                                                              default: return make_un(e.ring, s.n, ctx.budget());
                                                          }
                                                      });
                                                      return equivalence(side("family NUS", *f, nus_nil_clean(*f)),
                                                                         side("R NUS", *e.profile, nus_nil_clean(*e.profile)));
                                                  }});
                             }
                         }
                         return tasks;
                     }});

        c.push_back({"C2_57_SN", "S_k(R) is strongly NUS iff R is", true, [](const SuiteContext& ctx) {
                         std::vector<CheckTask> tasks;
                         for (const auto& e : ctx.catalog().entries())
                             for (unsigned k = 2; k <= 3; ++k) {
                                 if (!ctx.fits(saturating_power(e.ring->order(), 1 + k * (k - 1) / 2))) continue;
                                 const std::string label = "S" + std::to_string(k) + "(" + e.label + ")";
                                 tasks.push_back({label, [&ctx, &e, k, label] {
                                                      const auto s = ctx.derived(label, [&] {
                                                          return make_sn_constant_diag(e.ring, k, ctx.budget());
                                                      });
                                                      return equivalence(snus(*s, "S_k(R)"), snus(*e.profile));
                                                  }});
                             }
                         return tasks;
                     }});

        c.push_back({"EX2_24_PARTITION", "M2(Z2) = U u Id u Nil, strongly NUS but not strongly square-nil clean",
                     false, [](const SuiteContext& ctx) {
                         return per_entry(
                             ctx,
                             [&ctx](const CatalogEntry& e) {
                                 const Profile& p = *e.profile;
                                 std::size_t covered = 0;
                                 std::optional<Index> missing;
                                 for (Index a = 0; a < p.ring().order(); ++a) {
                                     if (p.is_unit(a) || p.is_idempotent(a) || p.is_nilpotent(a))
                                         ++covered;
                                     else if (!missing)
                                         missing = a;
                                 }
                                 const std::string counts = "|U|=" + std::to_string(p.units().size()) +
                                                            " |Nil|=" + std::to_string(p.nilpotents().size()) +
                                                            " |Id|=" + std::to_string(p.idempotents().size()) +
                                                            " |U u Id u Nil|=" + std::to_string(covered);
                                 if (missing)
                                     return failed(counts + "; " + p.ring().format(*missing) + " is in none", {*missing});
                                 const Verdict nus = strongly_nus_search(p);
                                 if (!nus) return failed(counts + "; not strongly NUS", {*nus.witness});
                                 const Verdict sq = strongly_square_nil_clean(p);
                                 if (sq) return failed(counts + "; unexpectedly strongly square-nil clean");
                                 CheckResult r = passed(counts + "; not strongly square-nil clean at " +
                                                        p.ring().format(*sq.witness));
                                 const auto t2 = ctx.derived("T2(Z2)", [] { return make_upper_triangular(make_zmod(2), 2); });
                                 r.note = "T2(Z2) strongly NUS: " + yes(strongly_nus_search(*t2).value);
                                 return r;
                             },
                             [](const CatalogEntry& e) { return e.label == "M2(Z2)"; });
                     }});

        c.push_back({"P2_25_M3", "M_k(R) for k >= 3 fails the criterion at A = [[1,1,0],[1,0,0],[0,0,0]]", false,
                     [](const SuiteContext& ctx) {
                         return per_entry(
                             ctx,
                             [](const CatalogEntry& e) {
                                 const Profile& p = *e.profile;
                                 const Ring& r = p.ring();
                                 const auto* data = r.construction<MatrixPatternData>();
                                 const Ring& base = *data->base;
                                 const unsigned k = data->size;
                                 std::vector<ElementForm> entries(static_cast<std::size_t>(k) * k,
                                                                  base.decode(base.zero()));
                                 entries[0] = entries[1] = entries[k] = base.decode(base.one());
                                 const Index a = r.encode(ElementForm::vector(entries));
                                 const Index a2 = r.mul(a, a);
                                 const Index d = r.sub(r.mul(a2, a2), a2);
                                 const std::string w = "A^4-A^2 = " + r.format(d);
                                 if (p.is_unit(a)) return failed("A is a unit", {a});
                                 if (p.is_nilpotent(d)) return failed(w + " is nilpotent", {a, d});
                                 if (strongly_nus_criterion(p)) return failed("criterion holds", {a});
                                 return passed(w);
                             },
                             [](const CatalogEntry& e) {
                                 const auto* data = e.ring->construction<MatrixPatternData>();
                                 return data != nullptr && data->shape == MatrixShape::Full && data->size >= 3 &&
                                        data->base->order() > 1;
                             });
                     }});

        c.push_back({"L2_26_M2DOWN", "M2(R) strongly NUS implies R strongly square-nil clean", false,
                     [](const SuiteContext& ctx) {
                         std::vector<CheckTask> tasks;
                         for (const auto& e : ctx.catalog().entries()) {
                             if (!ctx.fits(saturating_power(e.ring->order(), 4))) continue;
                             const std::string label = "M2(" + e.label + ")";
                             tasks.push_back({label, [&ctx, &e, label] {
                                                  const auto m = ctx.derived(
                                                      label, [&] { return make_matrix(e.ring, 2, ctx.budget()); });
                                                  if (!strongly_nus_search(*m)) return skipped("M2(R) not strongly NUS");
                                                  return implication(ssnc(*e.profile));
                                              }});
                         }
                         return tasks;
                     }});

        c.push_back({"L2_27_C2_50_LOCAL",
                     "with only trivial idempotents, strongly NUS iff local with nil J(R)", true,
                     [](const SuiteContext& ctx) {
                         return per_entry(
                             ctx,
                             [](const CatalogEntry& e) {
                                 const Profile& p = *e.profile;
                                 Side nil_j{"J(R) nil", is_nil_ideal(p, p.jacobson()), nullptr, std::nullopt};
                                 return equivalence(snus(p), conj("local with nil J(R)", {side("local", p, local(p)), nil_j}));
                             },
                             [](const CatalogEntry& e) { return has_only_trivial_idempotents(*e.profile); });
                     }});

        c.push_back({"L2_55_26", "strongly NUS with 2 not a unit implies 2 or 6 nilpotent", false,
                     [](const SuiteContext& ctx) {
                         return per_entry(ctx, [](const CatalogEntry& e) {
                             const Profile& p = *e.profile;
                             if (integer_in(p, 2, &Profile::is_unit)) return skipped("2 is a unit");
                             if (!strongly_nus_search(p)) return skipped("not strongly NUS");
                             if (integer_in(p, 2, &Profile::is_nilpotent) || integer_in(p, 6, &Profile::is_nilpotent))
                                 return passed();
                             return failed("neither 2 nor 6 is nilpotent",
                                           {p.ring().integer(2), p.ring().integer(6)});
                         });
                     }});

        c.push_back({"L2_29_GSNC", "when 2 is in J(R), strongly NUS iff GSNC", true, [](const SuiteContext& ctx) {
                         return per_entry(
                             ctx,
                             [](const CatalogEntry& e) {
                                 const Profile& p = *e.profile;
                                 return equivalence(snus(p), side("GSNC", p, gsnc(p)));
                             },
                             [](const CatalogEntry& e) { return integer_in(*e.profile, 2, &Profile::in_jacobson); });
                     }});

        c.push_back({"L2_56_DICHOT", "when 2 is not a unit, strongly NUS iff GSNC or strongly square-nil clean", true,
                     [](const SuiteContext& ctx) {
                         return per_entry(
                             ctx,
                             [](const CatalogEntry& e) {
                                 const Profile& p = *e.profile;
                                 const Side g = side("GSNC", p, gsnc(p));
                                 const Side s = ssnc(p);
                                 Side either{"GSNC or strongly square-nil clean", g.value || s.value, &p.ring(),
                                             g.witness};
                                 return equivalence(snus(p), either);
                             },
                             [](const CatalogEntry& e) { return !integer_in(*e.profile, 2, &Profile::is_unit); });
                     }});

        c.push_back({"L2_30_UNITS", "strongly square-nil clean iff strongly NUS and u^2 - 1 nilpotent for units",
                     true, [](const SuiteContext& ctx) {
                         return per_entry(ctx, [](const CatalogEntry& e) {
                             const Profile& p = *e.profile;
                             return equivalence(ssnc(p), conj("strongly NUS and units square-unipotent",
                                                              {snus(p), side("units square-unipotent", p,
                                                                             units_square_unipotent(p))}));
                         });
                     }});

        c.push_back({"T2_38_M2", "M2(R) is strongly NUS for local strongly square-nil clean R", false,
                     [](const SuiteContext& ctx) {
                         std::vector<CheckTask> tasks;
                         for (const auto& e : ctx.catalog().entries()) {
                             if (!ctx.fits(saturating_power(e.ring->order(), 4))) continue;
                             const std::string label = "M2(" + e.label + ")";
                             tasks.push_back({label, [&ctx, &e, label] {
                                                  const Profile& p = *e.profile;
                                                  if (!local(p)) return skipped("R is not local");
                                                  if (!strongly_square_nil_clean(p))
                                                      return skipped("R is not strongly square-nil clean");
                                                  const auto m = ctx.derived(
                                                      label, [&] { return make_matrix(e.ring, 2, ctx.budget()); });
                                                  return implication(snus(*m, "M2(R)"));
                                              }});
                         }
                         return tasks;
                     }});

        c.push_back({"L2_49_COMM", "strongly NUS, 2 a unit and u^2 = 1 for all units imply commutative", false,
                     [](const SuiteContext& ctx) {
                         return per_entry(ctx, [](const CatalogEntry& e) {
                             const Profile& p = *e.profile;
                             const Ring& r = p.ring();
                             if (!integer_in(p, 2, &Profile::is_unit)) return skipped("2 is not a unit");
                             for (const Index u : p.units())
                                 if (r.mul(u, u) != r.one()) return skipped("some unit has u^2 != 1");
                             if (!strongly_nus_search(p)) return skipped("not strongly NUS");
                             return implication(side("commutative", p, commutative(p)));
                         });
                     }});

        c.push_back({"C2_42_FORMTRI", "T(R,S,M) is strongly NUS iff R and S are strongly square-nil clean", true,
                     [](const SuiteContext& ctx) {
                         std::vector<CheckTask> tasks;
                         std::vector<std::string> labels;
                         auto add = [&](const std::string& label, std::function<RingHandle()> build, RingHandle r,
                                        RingHandle s) {
                             if (std::find(labels.begin(), labels.end(), label) != labels.end()) return;
                             labels.push_back(label);
                             tasks.push_back({label, [&ctx, label, build, r, s] {
                                                  const auto t = ctx.derived(label, build);
                                                  const auto rp = ctx.derived(r->label(), [r] { return r; });
                                                  const auto sp = ctx.derived(s->label(), [s] { return s; });
                                                  return equivalence(snus(*t, "T(R,S,M)"),
                                                                     conj("R and S strongly square-nil clean",
                                                                          {ssnc(*rp, "R"), ssnc(*sp, "S")}));
                                              }});
                         };
                         for (const auto& e : ctx.catalog().entries())
                             if (const auto* data = e.ring->construction<FormalTriangularData>()) {
                                 RingHandle ring = e.ring;
                                 add(e.label, [ring] { return ring; }, data->bimodule.left_ring(),
                                     data->bimodule.right_ring());
                             }
                         const Budget budget = ctx.budget();
                         for (Index a = 2; a <= 9; ++a)
                             for (Index b = 2; b <= 9; ++b) {
                                 const Index k = std::gcd(a, b);
                                 RingHandle r = make_zmod(a), s = make_zmod(b);
                                 add("FT(Z" + std::to_string(a) + ",Z" + std::to_string(b) + ",Z" + std::to_string(k) + ")",
                                     [r, s, k, budget] {
                                         return make_formal_triangular(BimoduleSpec::reduction(r, s, k), budget);
                                     },
                                     r, s);
                             }
                         return tasks;
                     }});

        c.push_back({"L3_1_EPI", "RG strongly NUS implies R strongly NUS", false, [](const SuiteContext& ctx) {
                         return per_group_ring(ctx, [](const SuiteContext& cx, const GroupRingInstance& inst) {
                             const auto rg = cx.derived(inst.label, inst.build);
                             if (!strongly_nus_search(*rg)) return skipped("RG not strongly NUS");
                             return implication(snus(*inst.coefficient_profile));
                         });
                     }});

        c.push_back({"P3_2_PGROUP", "RG strongly NUS for strongly NUS R with p nilpotent and G a p-group", false,
                     [](const SuiteContext& ctx) {
                         return per_group_ring(ctx, [](const SuiteContext& cx, const GroupRingInstance& inst) {
                             if (!p_group_prime_in(inst, true)) return skipped("G is not a p-group with p nilpotent in R");
                             if (!strongly_nus_search(*inst.coefficient_profile)) return skipped("R not strongly NUS");
                             const auto rg = cx.derived(inst.label, inst.build);
                             return implication(snus(*rg, "RG"));
                         });
                     }});

        c.push_back({"L3_7_AUG", "Delta(RG) lies in J(RG) when p is in J(R) and G is a p-group", false,
                     [](const SuiteContext& ctx) {
                         return per_group_ring(ctx, [](const SuiteContext& cx, const GroupRingInstance& inst) {
                             if (!p_group_prime_in(inst, false)) return skipped("G is not a p-group with p in J(R)");
                             const auto rg = cx.derived(inst.label, inst.build);
                             const Ideal delta = augmentation_ideal(rg->ring_handle());
                             for (const Index x : delta.elements())
                                 if (!rg->in_jacobson(x))
                                     return failed(rg->ring().format(x) + " is in Delta(RG) but not in J(RG)", {x});
                             return passed();
                         });
                     }});

        c.push_back({"T3_8_CRIT", "RG strongly NUS iff R strongly NUS and Delta(RG) nil (p in J(R), G a p-group)",
                     true, [](const SuiteContext& ctx) {
                         return per_group_ring(ctx, [](const SuiteContext& cx, const GroupRingInstance& inst) {
                             if (!p_group_prime_in(inst, false)) return skipped("G is not a p-group with p in J(R)");
                             const auto rg = cx.derived(inst.label, inst.build);
                             const Ideal delta = augmentation_ideal(rg->ring_handle());
                             Side nil{"Delta(RG) nil", is_nil_ideal(*rg, delta), nullptr, std::nullopt};
                             return equivalence(snus(*rg, "RG"),
                                                conj("R strongly NUS and Delta(RG) nil",
                                                     {snus(*inst.coefficient_profile), nil}));
                         });
                     }});

        c.push_back({"L3_9_QUOT", "RG/J(RG) strongly NUS when R is and Delta(RG) lies in J(RG)", false,
                     [](const SuiteContext& ctx) {
                         return per_group_ring(ctx, [](const SuiteContext& cx, const GroupRingInstance& inst) {
                             if (!strongly_nus_search(*inst.coefficient_profile)) return skipped("R not strongly NUS");
                             const auto rg = cx.derived(inst.label, inst.build);
                             const Ideal delta = augmentation_ideal(rg->ring_handle());
                             if (!ideal_within(delta, *rg)) return skipped("Delta(RG) not in J(RG)");
                             const auto q = cx.derived(inst.label + "/J", [&] {
                                 return make_quotient(rg->ring_handle(), rg->jacobson());
                             });
                             return implication(snus(*q, "RG/J(RG)"));
                         });
                     }});

        std::sort(c.begin(), c.end(), [](const TheoremCheck& x, const TheoremCheck& y) { return x.id < y.id; });
        return c;
    }();
    return checks;
}

SuiteReport run_tasks(const Catalog& catalog, const std::vector<std::string>& selection, const SuiteConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<const TheoremCheck*> chosen;
    for (const auto& id : selection) {
        const TheoremCheck* c = find_check(id);
        if (c == nullptr) throw InvalidConstructionError("unknown check id " + id);
        if (std::find(chosen.begin(), chosen.end(), c) == chosen.end()) chosen.push_back(c);
    }

    SuiteContext ctx(catalog, config);
    struct Slot {
        const TheoremCheck* check;
        CheckTask task;
    };
    std::vector<Slot> slots;
    SuiteReport report;
    for (const TheoremCheck* c : chosen) {
        auto tasks = c->instances(ctx);
        if (tasks.empty()) {
            CheckResult r = skipped("no applicable instance");
            r.id = c->id;
            r.instance = "-";
            report.results.push_back(std::move(r));
        }
        for (auto& t : tasks) slots.push_back({c, std::move(t)});
    }

    std::vector<CheckResult> results(slots.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < slots.size(); i = next.fetch_add(1)) {
            const auto t0 = std::chrono::steady_clock::now();
            CheckResult r;
            try {
                r = slots[i].task.run();
            } catch (const std::exception& e) {
                r = failed(std::string("error: ") + e.what());
            }
            r.id = slots[i].check->id;
            r.instance = slots[i].task.instance;
            r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            results[i] = std::move(r);
        }
    };
    const unsigned workers = std::max(1u, config.parallel);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    for (auto& r : results) report.results.push_back(std::move(r));

    std::stable_sort(report.results.begin(), report.results.end(), [](const CheckResult& a, const CheckResult& b) {
        return std::tie(a.id, a.instance) < std::tie(b.id, b.instance);
    });
    for (const auto& r : report.results) {
        if (r.status == CheckStatus::Pass) ++report.passed;
        else if (r.status == CheckStatus::Fail) ++report.failed;
        else ++report.skipped;
    }
    report.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace

SuiteReport run_suite(const Catalog& catalog, const std::vector<std::string>& selection, const SuiteConfig& config) {
    return run_tasks(catalog, selection, config);
}

SuiteReport run_suite_on(const RingSpec& spec, const std::vector<std::string>& selection, const SuiteConfig& config,
                         const Budget& budget) {
    const Catalog catalog = Catalog::from_specs({spec}, budget, config.seed);
    return run_tasks(catalog, selection, config);
}

}  // namespace nusring
