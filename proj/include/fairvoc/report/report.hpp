#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fairvoc/audit/check.hpp"

namespace fairvoc::report {

inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr std::string_view kFixedClock = "2000-01-01T00:00:00Z";

enum class FairCategory { Findable, Accessible, Interoperable, Reusable };

std::string_view to_string(FairCategory c) noexcept;
std::optional<FairCategory> parse_category(std::string_view text);

struct ScoringConfig {
    double recommended = 1.0;
    double optional = 0.5;
    double informational = 0.0;
    /// Check-id prefix -> category; the longest matching prefix wins over the defaults.
    std::vector<std::pair<std::string, FairCategory>> overrides;

    double weight(audit::Severity s) const;
};

FairCategory category_of(std::string_view check_id, const ScoringConfig& config = {});

struct ReportCheck {
    audit::CheckResult result;
    FairCategory category = FairCategory::Reusable;

    bool operator==(const ReportCheck&) const = default;
};

struct Scores {
    std::optional<double> findable, accessible, interoperable, reusable, overall;

    std::optional<double> of(FairCategory c) const;
    bool operator==(const Scores&) const = default;
};

struct Environment {
    std::string network;   // "online", "offline", "replay" or "record"
    std::string cassette;  // directory, empty when none

    bool operator==(const Environment&) const = default;
};

struct Report {
    std::string subject;
    std::string tool_version{kToolVersion};
    std::string timestamp;
    Scores scores;
    std::vector<ReportCheck> checks;  // ordered by (category, id)
    Environment environment;

    bool operator==(const Report&) const = default;
};

/// 100 * (weight of Pass) / (weight of Pass, Fail and Warn); Info and Skipped
/// checks do not count. Null when nothing counts.
std::optional<double> score(const std::vector<ReportCheck>& checks, const ScoringConfig& config);

Report assemble_report(std::vector<audit::CheckResult> results, std::string subject,
                       const ScoringConfig& config = {}, std::string timestamp = std::string(kFixedClock),
                       Environment environment = {});

enum class ReportFormat { Json, Markdown };
std::optional<ReportFormat> parse_report_format(std::string_view text);

std::string render_report(const Report& report, ReportFormat format);

/// Inverse of the JSON rendering. Throws InvalidConfig on schema violations.
Report report_from_json(std::string_view text);

/// 0 without Recommended failures, 1 otherwise.
int exit_code(const Report& report);

}  // namespace fairvoc::report
