#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fairvoc::audit {

enum class Status { Pass, Fail, Warn, Skipped, Info };
enum class Severity { Recommended, Optional, Informational };

std::string_view to_string(Status status) noexcept;
std::string_view to_string(Severity severity) noexcept;
std::optional<Status> parse_status(std::string_view text);
std::optional<Severity> parse_severity(std::string_view text);

struct Evidence {
    std::string message;
    std::vector<std::string> values;  // offending or satisfying values

    bool operator==(const Evidence&) const = default;
};

/// One audit finding. `reference` names the best-practice topic the check
/// comes from.
struct CheckResult {
    std::string id;
    Status status = Status::Info;
    Severity severity = Severity::Informational;
    Evidence evidence;
    std::string reference;

    bool operator==(const CheckResult&) const = default;
};

/// Only Recommended failures count against a subject.
inline bool is_blocking(const CheckResult& r) {
    return r.severity == Severity::Recommended && r.status == Status::Fail;
}

}  // namespace fairvoc::audit
