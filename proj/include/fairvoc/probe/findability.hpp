#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "fairvoc/audit/check.hpp"
#include "fairvoc/probe/probe.hpp"

namespace fairvoc::probe {

enum class Outcome { Found, NotFound, Unreachable };

struct RegistryFinding {
    std::string registry;  // "prefix.cc", "LOV" or a custom name
    std::string queried;
    Outcome outcome = Outcome::Unreachable;
    std::vector<std::string> values;  // namespaces found
    std::string evidence;             // transport or HTTP detail
    std::string fetched_at;
};

struct RegistryEndpoints {
    std::string prefixcc = "http://prefix.cc/{prefix}.file.txt";
    std::string lov = "https://lov.linkeddata.es/dataset/lov/api/v2/vocabulary/search?q={namespace}";
};

using Clock = std::function<std::string()>;

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_now();

/// Percent-encodes everything outside RFC 3986 unreserved characters.
std::string url_encode(std::string_view text);

RegistryFinding lookup_prefix(Transport& transport, const std::string& prefix,
                              const RegistryEndpoints& endpoints = {}, const Clock& clock = utc_now,
                              const RetryPolicy& retry = {});

RegistryFinding lookup_lov(Transport& transport, const std::string& namespace_iri,
                           const RegistryEndpoints& endpoints = {}, const Clock& clock = utc_now,
                           const RetryPolicy& retry = {});

/// findability.prefix_registry: Pass when the registered namespace matches,
/// Warn on a collision or an unreachable registry, Info when unregistered.
audit::CheckResult check_prefix_registry(const RegistryFinding& finding,
                                         const std::string& namespace_iri);

/// findability.lov_registry: Pass when found, otherwise Info.
audit::CheckResult check_lov_registry(const RegistryFinding& finding);

/// findability.jsonld_annotations.
audit::CheckResult detect_jsonld_annotations(std::string_view html);

}  // namespace fairvoc::probe
