#include "nusring/report.hpp"

#include <cstdio>
#include <regex>
#include <sstream>

#include <json.hpp>

namespace nusring {

RingCounts counts_of(const Profile& p) {
    return RingCounts{p.units().size(), p.nilpotents().size(), p.idempotents().size(), p.square_idempotents().size(),
                      p.jacobson().size()};
}

Report ring_report(const std::string& spec, const Profile& p, const RingClassReport* classes) {
    Report r;
    r.spec = spec;
    r.order = p.ring().order();
    r.counts = counts_of(p);
    if (classes != nullptr)
        for (const auto& [name, verdict] : classes->entries) {
            PredicateLine line{name, verdict.value, std::nullopt};
            if (verdict.witness) line.witness = p.ring().format(*verdict.witness);
            r.predicates.push_back(std::move(line));
        }
    return r;
}

void attach_suite(Report& report, const SuiteReport& suite) {
    report.checks = suite.results;
    report.timing_ms = suite.timing_ms;
}

std::string render_json(const Report& report) {
    using nlohmann::ordered_json;
    auto nullable = [](const std::optional<std::string>& s) { return s ? ordered_json(*s) : ordered_json(nullptr); };
    ordered_json j;
    j["spec"] = report.spec;
    j["order"] = report.order;
    j["counts"] = {
        {"units", report.counts.units},
        {"nilpotents", report.counts.nilpotents},
        {"idempotents", report.counts.idempotents},
        {"square_idempotents", report.counts.square_idempotents},
        {"jacobson", report.counts.jacobson},
    };
    j["predicates"] = ordered_json::object();
    for (const auto& p : report.predicates) j["predicates"][p.name] = {{"value", p.value}, {"witness", nullable(p.witness)}};
    j["checks"] = ordered_json::array();
    for (const auto& c : report.checks)
        j["checks"].push_back({
            {"id", c.id},
            {"instance", c.instance},
            {"status", std::string(to_string(c.status))},
            {"witness", nullable(c.witness)},
        });
    j["timing_ms"] = report.timing_ms;
    return j.dump(2) + "\n";
}

std::string render_text(const Report& report) {
    std::ostringstream out;
    out << "ring   " << report.spec << "\n";
    out << "order  " << report.order << "\n";
    const auto& c = report.counts;
    out << "counts |U|=" << c.units << " |Nil|=" << c.nilpotents << " |Id|=" << c.idempotents
        << " |SqId|=" << c.square_idempotents << " |J|=" << c.jacobson << "\n";
    if (!report.predicates.empty()) {
        out << "\npredicates\n";
        for (const auto& p : report.predicates) {
            char name[32];
            std::snprintf(name, sizeof name, "%-24s", p.name.c_str());
            out << "  " << name << (p.value ? "true" : "false");
            if (p.witness) out << "  (fails at " << *p.witness << ")";
            out << "\n";
        }
    }
    if (!report.checks.empty()) {
        std::size_t pass = 0, fail = 0, skip = 0;
        out << "\nchecks\n";
        for (const auto& r : report.checks) {
            out << "  " << to_string(r.status) << "  " << r.id << "  " << r.instance;
            if (r.witness) out << "  " << *r.witness;
            if (!r.note.empty()) out << "  [" << r.note << "]";
            out << "\n";
            (r.status == CheckStatus::Pass ? pass : r.status == CheckStatus::Fail ? fail : skip) += 1;
        }
        out << "\n" << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
    }
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.1f", report.timing_ms);
    out << "time   " << ms << " ms\n";
    return out.str();
}

std::string mask_timing(const std::string& json) {
    static const std::regex timing(R"re("timing_ms"\s*:\s*[-+0-9.eE]+)re");
    return std::regex_replace(json, timing, "\"timing_ms\": 0");
}

}  // namespace nusring
