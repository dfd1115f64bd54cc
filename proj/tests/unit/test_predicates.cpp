#include <doctest.h>

#include "nusring/harness.hpp"
#include "nusring/predicates.hpp"
#include "nusring/ring_spec.hpp"
#include "oracles.hpp"

using namespace nusring;

namespace {

ProfileHandle profile_of(const char* text) { return Profile::compute(build_ring(parse_spec(text), Budget{1u << 16})); }

bool value(const char* text, std::string_view name) { return evaluate_predicate(*profile_of(text), name).value; }

const Catalog& catalog() {
    static const Catalog c = Catalog::default_catalog();
    return c;
}

}  // namespace

TEST_CASE("classification table") {
    for (const char* text : {"Z3xZ3", "M2(Z3)", "M2(Z2)"}) {
        CAPTURE(std::string(text));
        CHECK(value(text, "strongly_nus"));
        CHECK_FALSE(value(text, "strongly_nil_clean"));
    }
    CHECK(value("Z5", "strongly_nus"));
    CHECK_FALSE(value("Z5", "strongly_square_nil"));
    CHECK_FALSE(value("M3(Z2)", "strongly_nus"));
    CHECK_FALSE(value("T2(Z5)", "strongly_nus"));
    CHECK_FALSE(value("Z6", "local"));
    CHECK(value("Z3", "strongly_square_nil"));
    CHECK(value("Z2", "strongly_nil_clean"));
}

TEST_CASE("the zero ring satisfies every predicate") {
    const RingClassReport report = classify(*profile_of("Z1"));
    for (const auto& [name, verdict] : report.entries) {
        CAPTURE(name);
        CHECK(verdict.value);
    }
}

TEST_CASE("predicates agree with pair-scan oracles") {
    using oracle::Kind;
    for (const char* text : {"Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z9", "Z10", "Z2xZ2", "Z3xZ3", "M2(Z2)",
                             "T2(Z2)", "T2(Z3)", "S2(Z3)", "Snm2 2(Z2)", "U3(Z2)", "TE(Z4)", "GR(Z2,C2xC2)",
                             "GR(Z2,C3)", "skewT2(Z2xZ2,swap)"}) {
        const auto p = profile_of(text);
        const Ring& r = p->ring();
        CAPTURE(std::string(text));
        CHECK(strongly_nus_search(*p).value == oracle::non_units_decompose(r, Kind::SquareNilClean, true));
        CHECK(nus_nil_clean(*p).value == oracle::non_units_decompose(r, Kind::SquareNilClean, false));
        CHECK(gsnc(*p).value == oracle::non_units_decompose(r, Kind::NilClean, true));
        CHECK(strongly_square_nil_clean(*p).value == oracle::all_decompose(r, Kind::SquareNilClean, true));
        CHECK(strongly_nil_clean(*p).value == oracle::all_decompose(r, Kind::NilClean, true));
        CHECK(nil_clean(*p).value == oracle::all_decompose(r, Kind::NilClean, false));
        CHECK(strongly_clean(*p).value == oracle::all_decompose(r, Kind::Clean, true));
        CHECK(clean(*p).value == oracle::all_decompose(r, Kind::Clean, false));
    }
}

TEST_CASE("criterion and search agree on every catalog ring") {
    for (const auto& e : catalog().entries()) {
        CAPTURE(e.label);
        const Verdict a = strongly_nus_criterion(*e.profile);
        const Verdict b = strongly_nus_search(*e.profile);
        CHECK(a.value == b.value);
    }
}

TEST_CASE("the implication chain holds on every catalog ring") {
    for (const auto& e : catalog().entries()) {
        CAPTURE(e.label);
        const RingClassReport report = classify(*e.profile);
        CHECK_FALSE(report.chain_violation().has_value());
        CHECK(report.entries.size() == predicate_names().size());
    }
}

TEST_CASE("parallel classification matches the sequential one") {
    const auto p = profile_of("T2(Z3)");
    const RingClassReport a = classify(*p, 1);
    const RingClassReport b = classify(*p, 4);
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        CHECK(a.entries[i].first == b.entries[i].first);
        CHECK(a.entries[i].second.value == b.entries[i].second.value);
        CHECK(a.entries[i].second.witness == b.entries[i].second.witness);
    }
}

TEST_CASE("failure witnesses are minimal and reproduce the failure") {
    for (const auto& e : catalog().entries()) {
        const Profile& p = *e.profile;
        const Ring& r = p.ring();
        const Verdict v = strongly_nus_search(p);
        if (v.value) continue;
        CAPTURE(e.label);
        REQUIRE(v.witness.has_value());
        const Index w = *v.witness;
        CHECK_FALSE(p.is_unit(w));
        CHECK_FALSE(decompose(p, w, DecompKind::SquareNilClean, true).has_value());
        const Index w2 = r.mul(w, w);
        CHECK_FALSE(p.is_nilpotent(r.sub(r.mul(w2, w2), w2)));
        for (Index a = 0; a < w; ++a)
            CHECK((p.is_unit(a) || decompose(p, a, DecompKind::SquareNilClean, true).has_value()));
    }
}

TEST_CASE("units square-unipotent and strongly pi-regular") {
    CHECK(value("Z3", "units_square_unipotent"));
    CHECK_FALSE(value("Z5", "units_square_unipotent"));
    for (const auto& e : catalog().entries()) CHECK(strongly_pi_regular(*e.profile).value);  // finite rings
}

TEST_CASE("unknown predicate names are rejected") {
    CHECK_THROWS(evaluate_predicate(*profile_of("Z2"), "no_such_predicate"));
}
