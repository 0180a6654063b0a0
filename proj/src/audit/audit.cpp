#include "fairvoc/audit/audit.hpp"

#include "fairvoc/audit/uri.hpp"
#include "fairvoc/audit/versioning.hpp"

namespace fairvoc::audit {

std::vector<CheckResult> audit_model(const rdf::OntologyModel& model, const AuditOptions& options) {
    OntologyMetadata meta = extract_metadata(model, options.aliases);
    std::vector<CheckResult> out;
    auto append = [&out](std::vector<CheckResult> more) {
        out.insert(out.end(), std::make_move_iterator(more.begin()),
                   std::make_move_iterator(more.end()));
    };
    append(check_recommended_metadata(meta));
    append(check_optional_metadata(meta));
    append(check_metadata_hygiene(meta));
    append(check_versioning(meta, model.ontology_iri()));
    append(check_uri_profile(profile_uri(model.ontology_iri(), model), model.ontology_iri()));
    append(check_prefix_sanity(meta));
    append(check_term_coverage(check_term_annotations(model), options.thresholds));
    return out;
}

}  // namespace fairvoc::audit
