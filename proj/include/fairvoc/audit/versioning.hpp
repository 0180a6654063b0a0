#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fairvoc/audit/check.hpp"
#include "fairvoc/audit/metadata.hpp"

namespace fairvoc::audit {

struct SemVer {
    std::uint64_t major = 0;
    std::uint64_t minor = 0;
    std::uint64_t patch = 0;

    std::string to_string() const;
    auto operator<=>(const SemVer&) const = default;
};

/// Accepts exactly ^[0-9]+\.[0-9]+\.[0-9]+$. Throws MalformedVersion,
/// including for components that overflow 64 bits.
SemVer parse_semver(std::string_view text);

/// True when the IRI, minus a trailing '#' or '/', ends in a path segment
/// that looks like a version number (1.0, 1.0.0, v2.1.3).
bool has_version_segment(std::string_view iri);

std::vector<CheckResult> check_versioning(const OntologyMetadata& meta, std::string_view ontology_iri);

}  // namespace fairvoc::audit
