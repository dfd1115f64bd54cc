#include <doctest.h>

#include <json.hpp>

#include "nusring/report.hpp"
#include "nusring/ring_spec.hpp"

using namespace nusring;

TEST_CASE("json keys appear in the fixed order") {
    const auto p = Profile::compute(build_ring(parse_spec("Z4")));
    const RingClassReport classes = classify(*p);
    Report r = ring_report("Z4", *p, &classes);
    CheckResult c;
    c.id = "T7_EQUIV";
    c.instance = "Z4";
    r.checks.push_back(c);
    const std::string text = render_json(r);
    const auto j = nlohmann::ordered_json::parse(text);
    std::vector<std::string> keys;
    for (const auto& [key, _] : j.items()) keys.push_back(key);
    CHECK(keys == std::vector<std::string>{"spec", "order", "counts", "predicates", "checks", "timing_ms"});
    std::vector<std::string> counts;
    for (const auto& [key, _] : j["counts"].items()) counts.push_back(key);
    CHECK(counts == std::vector<std::string>{"units", "nilpotents", "idempotents", "square_idempotents", "jacobson"});
    CHECK(j["order"] == 4);
    CHECK(j["counts"]["units"] == 2);
    CHECK(j["counts"]["jacobson"] == 2);
    CHECK(j["predicates"]["strongly_nus"]["value"] == true);
    CHECK(j["predicates"]["strongly_nus"]["witness"].is_null());
    CHECK(j["predicates"].size() == predicate_names().size());
    CHECK(j["checks"][0]["status"] == "pass");
    CHECK(j["checks"][0]["witness"].is_null());
}

TEST_CASE("failing predicates carry formatted witnesses") {
    const auto p = Profile::compute(build_ring(parse_spec("Z6")));
    const RingClassReport classes = classify(*p);
    const auto j = nlohmann::json::parse(render_json(ring_report("Z6", *p, &classes)));
    CHECK(j["predicates"]["local"]["value"] == false);
    CHECK(j["predicates"]["local"]["witness"].is_string());
}

TEST_CASE("timing masking") {
    const std::string a = "{\"x\": 1, \"timing_ms\": 12.5}";
    const std::string b = "{\"x\": 1, \"timing_ms\": 3e-05}";
    CHECK(mask_timing(a) == mask_timing(b));
    CHECK(mask_timing(a) == "{\"x\": 1, \"timing_ms\": 0}");
}

TEST_CASE("text report") {
    const auto p = Profile::compute(build_ring(parse_spec("M2(Z2)")));
    const RingClassReport classes = classify(*p);
    const std::string text = render_text(ring_report("M2(Z2)", *p, &classes));
    CHECK(text.find("|U|=6 |Nil|=4 |Id|=8") != std::string::npos);
    CHECK(text.find("strongly_nus            true") != std::string::npos);
}
