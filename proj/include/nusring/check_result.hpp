#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nusring {

enum class CheckStatus { Pass, Fail, Skip };

std::string_view to_string(CheckStatus status) noexcept;

/// Outcome of one verification (a ring-axiom check or one theorem check on one instance).
struct CheckResult {
    std::string id;
    std::string instance;
    CheckStatus status = CheckStatus::Pass;
    /// Human-readable witness; always present on failure.
    std::optional<std::string> witness;
    /// Element indices behind the witness, in the instance ring's encoding.
    std::vector<std::uint32_t> witness_elements;
    /// Informational remark (not part of the machine-readable report).
    std::string note;
    /// Equivalence checks: the common value of both sides (true = positive instance).
    std::optional<bool> truth;
    double timing_ms = 0.0;

    bool passed() const noexcept { return status == CheckStatus::Pass; }
    bool failed() const noexcept { return status == CheckStatus::Fail; }
};

}  // namespace nusring
