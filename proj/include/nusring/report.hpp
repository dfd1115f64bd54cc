#pragma once
// Text and JSON rendering of classification and verification reports.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nusring/analysis.hpp"
#include "nusring/check_result.hpp"
#include "nusring/harness.hpp"
#include "nusring/predicates.hpp"

namespace nusring {

struct RingCounts {
    std::size_t units = 0;
    std::size_t nilpotents = 0;
    std::size_t idempotents = 0;
    std::size_t square_idempotents = 0;
    std::size_t jacobson = 0;
};

RingCounts counts_of(const Profile& p);

struct PredicateLine {
    std::string name;
    bool value = true;
    std::optional<std::string> witness;  // formatted element
};

struct Report {
    std::string spec;
    std::uint64_t order = 0;
    RingCounts counts;
    std::vector<PredicateLine> predicates;
    std::vector<CheckResult> checks;
    double timing_ms = 0.0;
};

/// Spec, order and counts of a ring; predicates are filled when `classes` is given.
Report ring_report(const std::string& spec, const Profile& p, const RingClassReport* classes = nullptr);
void attach_suite(Report& report, const SuiteReport& suite);

/// Keys in the fixed order spec, order, counts, predicates, checks, timing_ms.
std::string render_json(const Report& report);
std::string render_text(const Report& report);

/// Replaces every "timing_ms" value with 0, for byte comparisons between runs.
std::string mask_timing(const std::string& json);

}  // namespace nusring
