#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fairvoc/audit/check.hpp"

namespace fairvoc::audit {

/// Static description of a check. Ids containing "{version}" are templates
/// instantiated once per version IRI.
struct CatalogEntry {
    std::string_view id;
    Severity severity;
    std::string_view reference;
    std::string_view description;
};

std::span<const CatalogEntry> check_catalog();

/// Catalog entry for a concrete id (templates are matched). Null if unknown.
const CatalogEntry* find_check(std::string_view id);

/// Builds a result whose severity and reference come from the catalog.
/// Throws std::out_of_range for ids missing from the catalog.
CheckResult make_result(std::string_view id, Status status, std::string message,
                        std::vector<std::string> values = {});

}  // namespace fairvoc::audit
