#pragma once

#include <string_view>
#include <vector>

#include "fairvoc/audit/check.hpp"
#include "fairvoc/rdf/model.hpp"

namespace fairvoc::audit {

enum class Termination { Hash, Slash, Other };
enum class PermanentHost { None, W3id, Purl, OtherKnown };

struct UriProfile {
    Termination termination = Termination::Other;
    PermanentHost permanent_host = PermanentHost::None;
    bool version_in_namespace = false;
    double opaque_terms_fraction = 0.0;
    std::vector<std::string> opaque_terms;
};

Termination termination_of(std::string_view iri) noexcept;

/// Local names such as EXO_C0001 or GO_0008150.
bool is_opaque_local_name(std::string_view local);

/// Throws InvalidIri when `ontology_iri` is not absolute.
UriProfile profile_uri(std::string_view ontology_iri, const rdf::OntologyModel& model);

std::vector<CheckResult> check_uri_profile(const UriProfile& profile, std::string_view ontology_iri);

}  // namespace fairvoc::audit
