#pragma once
// Theorem verification suite over a fixed catalog of finite rings.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nusring/analysis.hpp"
#include "nusring/check_result.hpp"
#include "nusring/constructions.hpp"
#include "nusring/ring_spec.hpp"

namespace nusring {

struct CatalogEntry {
    std::string label;
    RingSpec spec;
    RingHandle ring;
    ProfileHandle profile;
    CheckResult axioms;
};

class Catalog {
public:
    /// Builds every entry, verifies its axioms (full up to order 64, sampled above) and
    /// computes its profile. Throws InvariantViolation if an entry fails its axioms.
    static Catalog from_specs(const std::vector<RingSpec>& specs, const Budget& budget = {},
                              std::uint64_t seed = 1);
    static Catalog default_catalog(const Budget& budget = {}, std::uint64_t seed = 1);
    static std::vector<RingSpec> default_specs();

    const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }
    const CatalogEntry* find(std::string_view label) const;

private:
    std::vector<CatalogEntry> entries_;
};

struct SuiteConfig {
    /// Budget for rings a check derives from catalog entries (matrix rings over them,
    /// triangular extensions, ...).
    Budget instance_budget{16384};
    std::uint64_t seed = 1;
    unsigned parallel = 1;
};

class SuiteContext;

/// One (check, instance) evaluation, deferred so the runner can schedule it.
struct CheckTask {
    std::string instance;
    std::function<CheckResult()> run;
};

struct TheoremCheck {
    std::string id;
    std::string description;
    /// True when the statement is an equivalence; such results carry CheckResult::truth.
    bool biconditional = false;
    std::function<std::vector<CheckTask>(const SuiteContext&)> instances;
};

/// Sorted by id.
const std::vector<TheoremCheck>& theorem_checks();
const TheoremCheck* find_check(std::string_view id);
std::vector<std::string> all_check_ids();

struct SuiteReport {
    std::vector<CheckResult> results;  // sorted by (id, instance)
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    double timing_ms = 0.0;

    bool ok() const noexcept { return failed == 0; }
};

/// Runs the selected checks on every applicable instance. Results are sorted by
/// (id, instance) whatever the worker count. Throws InvalidConstructionError on an unknown id.
SuiteReport run_suite(const Catalog& catalog, const std::vector<std::string>& selection, const SuiteConfig& config);

/// The checks restricted to a single ring, for `verify <spec>`. Catalog-wide checks that
/// need pairs or derived instances treat the ring as a one-entry catalog.
SuiteReport run_suite_on(const RingSpec& spec, const std::vector<std::string>& selection, const SuiteConfig& config,
                         const Budget& budget);

}  // namespace nusring
