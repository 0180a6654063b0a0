#pragma once

#include <vector>

#include "fairvoc/audit/check.hpp"
#include "fairvoc/audit/metadata.hpp"
#include "fairvoc/audit/terms.hpp"
#include "fairvoc/rdf/model.hpp"

namespace fairvoc::audit {

struct AuditOptions {
    AliasTable aliases = default_aliases();
    CoverageThresholds thresholds;
};

/// Every check that needs only the parsed model.
std::vector<CheckResult> audit_model(const rdf::OntologyModel& model,
                                     const AuditOptions& options = {});

}  // namespace fairvoc::audit
