#include "fairvoc/audit/catalog.hpp"

#include <array>
#include <stdexcept>

namespace fairvoc::audit {

namespace {

using enum Severity;

constexpr std::string_view kMetaRec = "Ontology metadata: recommended properties";
constexpr std::string_view kMetaOpt = "Ontology metadata: optional properties";
constexpr std::string_view kTerms = "Term metadata";
constexpr std::string_view kVersioning = "Ontology versioning";
constexpr std::string_view kNegotiation = "Content negotiation";
constexpr std::string_view kVersionRedirect = "Content negotiation: version redirection";

constexpr std::array kCatalog{
    CatalogEntry{"metadata.license", Recommended, kMetaRec, "dcterms:license is declared"},
    CatalogEntry{"metadata.creator", Recommended, kMetaRec, "dcterms:creator is declared"},
    CatalogEntry{"metadata.contributor", Recommended, kMetaRec, "dcterms:contributor is declared"},
    CatalogEntry{"metadata.created", Recommended, kMetaRec, "dcterms:created is declared"},
    CatalogEntry{"metadata.prior_version", Recommended, kMetaRec,
                 "owl:priorVersion is declared (first major releases are exempt)"},
    CatalogEntry{"metadata.namespace_uri", Recommended, kMetaRec,
                 "vann:preferredNamespaceUri is declared"},
    CatalogEntry{"metadata.version_iri", Recommended, kMetaRec, "owl:versionIRI is declared"},
    CatalogEntry{"metadata.prefix", Recommended, kMetaRec,
                 "vann:preferredNamespacePrefix is declared"},
    CatalogEntry{"metadata.title", Recommended, kMetaRec, "dcterms:title is declared"},
    CatalogEntry{"metadata.description", Recommended, kMetaRec, "dcterms:description is declared"},
    CatalogEntry{"metadata.citation", Recommended, kMetaRec,
                 "dcterms:bibliographicCitation is declared"},
    CatalogEntry{"metadata.abstract", Optional, kMetaOpt, "dcterms:abstract is declared"},
    CatalogEntry{"metadata.see_also", Optional, kMetaOpt, "rdfs:seeAlso is declared"},
    CatalogEntry{"metadata.status", Optional, kMetaOpt, "sw:status is declared"},
    CatalogEntry{"metadata.backward_compatibility", Optional, kMetaOpt,
                 "owl:backwardCompatibleWith (or owl:backwardCompatibility) is declared"},
    CatalogEntry{"metadata.incompatible_with", Optional, kMetaOpt,
                 "owl:incompatibleWith is declared"},
    CatalogEntry{"metadata.modified", Optional, kMetaOpt, "dcterms:modified is declared"},
    CatalogEntry{"metadata.issued", Optional, kMetaOpt, "dcterms:issued is declared"},
    CatalogEntry{"metadata.source", Optional, kMetaOpt, "dcterms:source is declared"},
    CatalogEntry{"metadata.publisher", Optional, kMetaOpt,
                 "dcterms:publisher (or dcterms:published) is declared"},
    CatalogEntry{"metadata.doi", Optional, kMetaOpt, "bibo:doi is declared"},
    CatalogEntry{"metadata.logo", Optional, kMetaOpt, "foaf:logo is declared"},
    CatalogEntry{"metadata.diagram", Optional, kMetaOpt, "foaf:depiction is declared"},
    CatalogEntry{"metadata.spelling.publisher", Optional, kMetaOpt,
                 "publisher uses the standard dcterms:publisher IRI"},
    CatalogEntry{"metadata.spelling.backward_compatibility", Optional, kMetaOpt,
                 "backward compatibility uses the standard owl:backwardCompatibleWith IRI"},
    CatalogEntry{"metadata.value_kinds", Optional, kMetaOpt,
                 "metadata values have the expected node kind (IRI or literal)"},

    CatalogEntry{"versioning.version_iri", Recommended, kVersioning,
                 "owl:versionIRI is distinct from the ontology IRI"},
    CatalogEntry{"versioning.semver", Recommended, kVersioning,
                 "owl:versionInfo follows semantic versioning X.Y.Z"},
    CatalogEntry{"versioning.version_in_namespace", Recommended, kVersioning,
                 "the ontology IRI does not embed a version number"},
    CatalogEntry{"versioning.consistency", Recommended, kVersioning,
                 "owl:versionIRI ends with the owl:versionInfo string"},

    CatalogEntry{"uri.termination", Informational, "Hash versus slash URIs",
                 "ontology IRI ends with '#', '/' or neither"},
    CatalogEntry{"uri.permanent", Recommended, "Permanent URIs",
                 "ontology IRI uses a permanent URI service (w3id.org, purl.org)"},
    CatalogEntry{"uri.opaque_terms", Informational, "Opaque URIs",
                 "fraction of terms with opaque local names"},

    CatalogEntry{"prefix.format", Recommended, "Ontology name and prefix",
                 "preferred prefix is short (at most 10 characters) and alphanumeric"},
    CatalogEntry{"prefix.known_collision", Recommended, "Ontology name and prefix",
                 "preferred prefix does not clash with a well-known registered prefix"},

    CatalogEntry{"terms.label", Recommended, kTerms, "every term has rdfs:label"},
    CatalogEntry{"terms.comment", Recommended, kTerms, "every term has rdfs:comment"},
    CatalogEntry{"terms.example", Optional, kTerms, "terms carry vann:example"},
    CatalogEntry{"terms.status", Optional, kTerms, "terms carry sw:term_status"},
    CatalogEntry{"terms.rationale", Optional, kTerms, "terms carry vaem:rationale"},
    CatalogEntry{"terms.source", Optional, kTerms, "terms carry dcterms:source"},

    CatalogEntry{"negotiation.ontology.text_html", Recommended, kNegotiation,
                 "ontology IRI with Accept text/html redirects (303) to HTML documentation"},
    CatalogEntry{"negotiation.ontology.text_turtle", Recommended, kNegotiation,
                 "ontology IRI with Accept text/turtle redirects (303) to a Turtle document"},
    CatalogEntry{"negotiation.ontology.application_rdf_xml", Recommended, kNegotiation,
                 "ontology IRI with Accept application/rdf+xml yields RDF/XML or 406"},
    CatalogEntry{"negotiation.ontology.no_accept", Recommended, kNegotiation,
                 "ontology IRI without Accept header serves Turtle by default"},
    CatalogEntry{"negotiation.version.{version}.text_html", Recommended, kVersionRedirect,
                 "version IRI with Accept text/html redirects (303) to that release's documentation"},
    CatalogEntry{"negotiation.version.{version}.text_turtle", Recommended, kVersionRedirect,
                 "version IRI with Accept text/turtle redirects (303) to that release's Turtle"},
    CatalogEntry{"documentation.html", Recommended, "Human-readable documentation",
                 "HTML documentation is reachable from the ontology IRI"},

    CatalogEntry{"findability.prefix_registry", Recommended, "Findability: prefix registration",
                 "prefix.cc maps the preferred prefix to the ontology namespace"},
    CatalogEntry{"findability.lov_registry", Optional, "Findability: ontology registries",
                 "the namespace is registered in Linked Open Vocabularies"},
    CatalogEntry{"findability.jsonld_annotations", Optional,
                 "Findability: in-document annotations",
                 "HTML documentation embeds schema.org JSON-LD annotations"},
};

bool matches(std::string_view pattern, std::string_view id) {
    auto slot = pattern.find("{version}");
    if (slot == std::string_view::npos) return pattern == id;
    auto head = pattern.substr(0, slot);
    auto tail = pattern.substr(slot + 9);
    return id.size() > head.size() + tail.size() && id.starts_with(head) && id.ends_with(tail);
}

}  // namespace

std::span<const CatalogEntry> check_catalog() { return kCatalog; }

const CatalogEntry* find_check(std::string_view id) {
    for (const auto& e : kCatalog)
        if (matches(e.id, id)) return &e;
    return nullptr;
}

CheckResult make_result(std::string_view id, Status status, std::string message,
                        std::vector<std::string> values) {
    const CatalogEntry* entry = find_check(id);
    if (!entry) throw std::out_of_range("check id not in catalog: " + std::string(id));
    return CheckResult{std::string(id), status, entry->severity,
                       Evidence{std::move(message), std::move(values)},
                       std::string(entry->reference)};
}

std::string_view to_string(Status status) noexcept {
    switch (status) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Warn: return "warn";
        case Status::Skipped: return "skipped";
        case Status::Info: return "info";
    }
    return "?";
}

std::string_view to_string(Severity severity) noexcept {
    switch (severity) {
        case Severity::Recommended: return "recommended";
        case Severity::Optional: return "optional";
        case Severity::Informational: return "informational";
    }
    return "?";
}

std::optional<Status> parse_status(std::string_view text) {
    for (auto s : {Status::Pass, Status::Fail, Status::Warn, Status::Skipped, Status::Info})
        if (to_string(s) == text) return s;
    return std::nullopt;
}

std::optional<Severity> parse_severity(std::string_view text) {
    for (auto s : {Severity::Recommended, Severity::Optional, Severity::Informational})
        if (to_string(s) == text) return s;
    return std::nullopt;
}

}  // namespace fairvoc::audit
