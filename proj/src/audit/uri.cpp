#include "fairvoc/audit/uri.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <regex>

#include "fairvoc/audit/catalog.hpp"
#include "fairvoc/audit/versioning.hpp"
#include "fairvoc/error.hpp"
#include "fairvoc/rdf/iri.hpp"

namespace fairvoc::audit {

namespace {

// Hosts that are stable identifier services or standards bodies.
constexpr std::array<std::string_view, 7> kOtherKnownHosts{
    "purl.obolibrary.org", "www.w3.org", "w3.org", "doi.org", "identifiers.org", "schema.org",
    "xmlns.com"};

std::string_view termination_name(Termination t) {
    switch (t) {
        case Termination::Hash: return "hash";
        case Termination::Slash: return "slash";
        case Termination::Other: return "other";
    }
    return "?";
}

}  // namespace

Termination termination_of(std::string_view iri_text) noexcept {
    if (iri_text.ends_with('#')) return Termination::Hash;
    if (iri_text.ends_with('/')) return Termination::Slash;
    return Termination::Other;
}

bool is_opaque_local_name(std::string_view local) {
    static const std::regex kOpaque(R"([A-Z][A-Z0-9]*_[A-Z]?[0-9]+)");
    return std::regex_match(local.begin(), local.end(), kOpaque);
}

UriProfile profile_uri(std::string_view ontology_iri, const rdf::OntologyModel& model) {
    if (!iri::is_absolute(ontology_iri)) throw InvalidIri(std::string(ontology_iri));
    UriProfile p;
    p.termination = termination_of(ontology_iri);
    std::string host = iri::host(ontology_iri);
    if (host == "w3id.org" || host == "www.w3id.org")
        p.permanent_host = PermanentHost::W3id;
    else if (host == "purl.org" || host == "www.purl.org" || host == "purl.archive.org")
        p.permanent_host = PermanentHost::Purl;
    else if (std::find(kOtherKnownHosts.begin(), kOtherKnownHosts.end(), host) !=
             kOtherKnownHosts.end())
        p.permanent_host = PermanentHost::OtherKnown;
    p.version_in_namespace = has_version_segment(ontology_iri);

    const auto& terms = model.declared_terms();
    for (const auto& t : terms)
        if (is_opaque_local_name(iri::local_name(t.iri))) p.opaque_terms.push_back(t.iri);
    p.opaque_terms_fraction =
        terms.empty() ? 0.0 : static_cast<double>(p.opaque_terms.size()) / terms.size();
    return p;
}

std::vector<CheckResult> check_uri_profile(const UriProfile& profile, std::string_view ontology_iri) {
    std::vector<CheckResult> out;
    out.push_back(make_result("uri.termination", Status::Info,
                              "ontology IRI termination: " +
                                  std::string(termination_name(profile.termination)),
                              {std::string(ontology_iri)}));
    std::string host = iri::host(ontology_iri);
    switch (profile.permanent_host) {
        case PermanentHost::W3id:
        case PermanentHost::Purl:
            out.push_back(make_result("uri.permanent", Status::Pass,
                                      "ontology IRI uses the permanent URI service " + host, {host}));
            break;
        case PermanentHost::OtherKnown:
            out.push_back(make_result("uri.permanent", Status::Pass,
                                      "ontology IRI is hosted by the stable identifier host " + host,
                                      {host}));
            break;
        case PermanentHost::None:
            out.push_back(make_result("uri.permanent", Status::Warn,
                                      "ontology IRI host " + host +
                                          " is not a permanent URI service (e.g. w3id.org, purl.org)",
                                      {host}));
            break;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", profile.opaque_terms_fraction);
    out.push_back(make_result("uri.opaque_terms", Status::Info,
                              std::string("fraction of terms with opaque local names: ") + buf,
                              profile.opaque_terms));
    return out;
}

}  // namespace fairvoc::audit
