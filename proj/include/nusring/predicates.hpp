#pragma once
// Ring-level class deciders. Every decider scans elements in ascending index order and
// reports the first failing element.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nusring/analysis.hpp"

namespace nusring {

struct Verdict {
    bool value = true;
    std::optional<Index> witness;  // first failing element when value is false

    explicit operator bool() const noexcept { return value; }
};

/// Every non-unit a has a^4 - a^2 nilpotent.
Verdict strongly_nus_criterion(const Profile& p);
/// Every non-unit is strongly square-nil clean (decomposition search).
Verdict strongly_nus_search(const Profile& p);
Verdict nus_nil_clean(const Profile& p);
Verdict strongly_square_nil_clean(const Profile& p);
Verdict square_nil_clean(const Profile& p);
Verdict strongly_nil_clean(const Profile& p);
Verdict nil_clean(const Profile& p);
/// Every non-unit is strongly nil-clean.
Verdict gsnc(const Profile& p);
Verdict strongly_clean(const Profile& p);
Verdict clean(const Profile& p);
Verdict strongly_pi_regular(const Profile& p);
/// u^2 - 1 nilpotent for every unit u.
Verdict units_square_unipotent(const Profile& p);
Verdict local(const Profile& p);
Verdict trivial_idempotents(const Profile& p);
Verdict commutative(const Profile& p);

/// Predicate names in report order.
const std::vector<std::string_view>& predicate_names();
Verdict evaluate_predicate(const Profile& p, std::string_view name);

/// All predicates of one ring, in predicate_names() order.
struct RingClassReport {
    std::vector<std::pair<std::string, Verdict>> entries;

    const Verdict& at(std::string_view name) const;
    /// First violated link of the implication chain
    /// strongly nil-clean => strongly square-nil clean => strongly NUS => strongly clean => clean,
    /// or nullopt when consistent.
    std::optional<std::string> chain_violation() const;
};

/// Evaluates every predicate, on up to `workers` threads; throws InvariantViolation if the
/// implication chain is broken.
RingClassReport classify(const Profile& p, unsigned workers = 1);

}  // namespace nusring
