#include <doctest.h>

#include <algorithm>

#include "nusring/analysis.hpp"
#include "nusring/errors.hpp"
#include "nusring/ring_spec.hpp"
#include "oracles.hpp"

using namespace nusring;

namespace {

const char* const kSmallRings[] = {
    "Z1",     "Z2",     "Z4",     "Z6",    "Z8",     "Z9",     "Z12",       "Z2xZ2",     "Z3xZ3",
    "M2(Z2)", "T2(Z2)", "T2(Z3)", "T3(Z2)", "S2(Z3)", "S3(Z2)", "Snm2 2(Z2)", "Tnm1 2(Z2)", "U3(Z2)",
    "TE(Z4)", "GR(Z2,C2)", "GR(Z2,C4)", "GR(Z4,C2)", "GR(Z2,C2xC2)", "GR(Z2,C3)", "skewT2(Z2xZ2,swap)",
};

ProfileHandle profile_of(const char* text) { return Profile::compute(build_ring(parse_spec(text))); }

}  // namespace

TEST_CASE("profile sets agree with brute force") {
    for (const char* text : kSmallRings) {
        const auto p = profile_of(text);
        const Ring& r = p->ring();
        CAPTURE(std::string(text));
        for (Index a = 0; a < r.order(); ++a) {
            REQUIRE(p->is_unit(a) == oracle::is_unit(r, a));
            REQUIRE(p->is_nilpotent(a) == oracle::is_nilpotent(r, a));
            REQUIRE(p->is_idempotent(a) == oracle::is_idempotent(r, a));
            REQUIRE(p->is_square_idempotent(a) == oracle::is_square_idempotent(r, a));
            if (p->is_unit(a)) {
                REQUIRE(r.mul(a, p->inverse(a)) == r.one());
                REQUIRE(r.mul(p->inverse(a), a) == r.one());
            }
            bool central = true;
            for (Index b = 0; b < r.order() && central; ++b) central = r.mul(a, b) == r.mul(b, a);
            REQUIRE(p->is_central(a) == central);
        }
        REQUIRE(p->jacobson().elements() == oracle::jacobson(r));
    }
}

TEST_CASE("closure-backed profiles agree with brute force on a sample") {
    // Above the table threshold, centre and radical take the generator-based paths.
    for (const char* text : {"M2(Z5)", "T3(Z3)"}) {
        const auto p = profile_of(text);
        const Ring& r = p->ring();
        CAPTURE(std::string(text));
        REQUIRE_FALSE(r.has_tables());
        for (Index a = 0; a < r.order(); a += 37) {
            CHECK(p->is_nilpotent(a) == oracle::is_nilpotent(r, a));
            bool central = true;
            for (Index b = 0; b < r.order() && central; ++b) central = r.mul(a, b) == r.mul(b, a);
            CHECK(p->is_central(a) == central);
        }
        for (const Index x : p->jacobson().elements()) CHECK(p->is_nilpotent(x));
    }
}

TEST_CASE("element counts of M2(Z2)") {
    const auto p = profile_of("M2(Z2)");
    CHECK(p->units().size() == 6);
    CHECK(p->nilpotents().size() == 4);
    CHECK(p->idempotents().size() == 8);
    CHECK(p->square_idempotents().size() == 14);
    CHECK(p->jacobson().size() == 1);
}

TEST_CASE("jacobson radicals of small rings") {
    CHECK(profile_of("Z8")->jacobson().size() == 4);
    CHECK(profile_of("Z6")->jacobson().size() == 1);
    CHECK(profile_of("T2(Z2)")->jacobson().size() == 2);
    CHECK(profile_of("T3(Z2)")->jacobson().size() == 8);
    CHECK(profile_of("TE(Z4)")->jacobson().size() == 8);
    CHECK(profile_of("GR(Z2,C4)")->jacobson().size() == 8);
}

TEST_CASE("locality") {
    for (const char* text : kSmallRings) {
        const auto p = profile_of(text);
        const Ring& r = p->ring();
        bool closed = true;
        for (Index a = 0; a < r.order() && closed; ++a)
            for (Index b = 0; b < r.order() && closed; ++b)
                if (!p->is_unit(a) && !p->is_unit(b)) closed = !p->is_unit(r.add(a, b));
        CAPTURE(std::string(text));
        CHECK(is_local(*p) == closed);
        if (!closed) CHECK(locality_witness(*p).has_value());
    }
    CHECK_FALSE(is_local(*profile_of("Z6")));
    CHECK(is_local(*profile_of("Z1")));
    CHECK(is_local(*profile_of("GR(Z2,C2xC2)")));
}

TEST_CASE("finite rings with only trivial idempotents are local") {
    for (const char* text : kSmallRings) {
        const auto p = profile_of(text);
        if (has_only_trivial_idempotents(*p)) CHECK(is_local(*p));
    }
}

TEST_CASE("ideal validation") {
    const RingHandle z6 = build_ring(parse_spec("Z6"));
    CHECK(Ideal::from_elements(z6, {0, 3}, "I").size() == 2);
    CHECK_THROWS_AS(Ideal::from_elements(z6, {0, 1}, "I"), InvalidConstructionError);
    CHECK_THROWS_AS(Ideal::from_elements(z6, {1, 2}, "I"), InvalidConstructionError);
    // A subgroup that is a left but not a two-sided ideal: first column of M2(Z2).
    const RingHandle m = build_ring(parse_spec("M2(Z2)"));
    std::vector<Index> column;
    for (const char* f : {"[0,0,0,0]", "[1,0,0,0]", "[0,0,1,0]", "[1,0,1,0]"})
        column.push_back(m->encode(parse_element_form(f)));
    CHECK_THROWS_AS(Ideal::from_elements(m, column, "L"), InvalidConstructionError);
}

TEST_CASE("generated ideals and nil ideals") {
    const RingHandle z12 = build_ring(parse_spec("Z12"));
    const auto p = Profile::compute(z12);
    const Ideal six = ideal_generated(z12, std::vector<Index>{6}, "<6>");
    CHECK(six.size() == 2);
    CHECK(is_nil_ideal(*p, six));
    const Ideal two = ideal_generated(z12, std::vector<Index>{2}, "<2>");
    CHECK(two.size() == 6);
    CHECK_FALSE(is_nil_ideal(*p, two));
    const Ideal m = ideal_generated(build_ring(parse_spec("M2(Z2)")), std::vector<Index>{1}, "<a>");
    CHECK(m.size() == 16);  // M2(Z2) is simple
}

TEST_CASE("decompositions reproduce the element") {
    for (const char* text : kSmallRings) {
        const auto p = profile_of(text);
        const Ring& r = p->ring();
        for (Index a = 0; a < r.order(); ++a)
            for (const DecompKind kind : {DecompKind::Clean, DecompKind::NilClean, DecompKind::SquareNilClean})
                for (const bool strong : {false, true}) {
                    const auto w = decompose(*p, a, kind, strong);
                    const oracle::Kind ok = kind == DecompKind::Clean      ? oracle::Kind::Clean
                                            : kind == DecompKind::NilClean ? oracle::Kind::NilClean
                                                                           : oracle::Kind::SquareNilClean;
                    REQUIRE(w.has_value() == oracle::decomposes(r, a, ok, strong));
                    if (!w) continue;
                    REQUIRE(r.add(w->e, w->n) == a);
                    if (strong) REQUIRE(r.mul(w->e, w->n) == r.mul(w->n, w->e));
                }
    }
}

TEST_CASE("square-nil-clean witnesses give clean witnesses") {
    for (const char* text : kSmallRings) {
        const auto p = profile_of(text);
        const Ring& r = p->ring();
        for (Index a = 0; a < r.order(); ++a) {
            const auto w = decompose(*p, a, DecompKind::SquareNilClean, true);
            if (!w) continue;
            const DecompWitness c = clean_witness_from_square(*p, *w);
            CHECK(p->is_idempotent(c.e));
            CHECK(p->is_unit(c.n));
            CHECK(r.add(c.e, c.n) == a);
            CHECK(c.commuting);
        }
    }
}

TEST_CASE("strongly pi-regular witnesses") {
    for (const char* text : {"Z12", "M2(Z2)", "T2(Z3)", "GR(Z2,C3)", "TE(Z4)"}) {
        const auto p = profile_of(text);
        const Ring& r = p->ring();
        for (Index a = 0; a < r.order(); ++a) {
            const auto w = strongly_pi_regular_witness(r, a);
            REQUIRE(w.has_value() == oracle::strongly_pi_regular(r, a));
            if (!w) continue;
            REQUIRE(r.pow(a, w->n) == r.mul(r.pow(a, w->n + 1), w->r));
        }
    }
}
