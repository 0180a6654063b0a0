#include "fairvoc/audit/metadata.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

#include "fairvoc/audit/catalog.hpp"
#include "fairvoc/audit/versioning.hpp"
#include "fairvoc/error.hpp"
#include "fairvoc/rdf/vocab.hpp"

namespace fairvoc::audit {

namespace {

using enum MetadataField;
using enum Severity;

constexpr std::array<FieldSpec, kMetadataFieldCount> kFields{{
    {License, "license", "http://purl.org/dc/terms/license", "", Recommended, ExpectedNode::Any},
    {Creator, "creator", "http://purl.org/dc/terms/creator", "", Recommended, ExpectedNode::Any},
    {Contributor, "contributor", "http://purl.org/dc/terms/contributor", "", Recommended,
     ExpectedNode::Any},
    {Created, "created", "http://purl.org/dc/terms/created", "", Recommended, ExpectedNode::Literal},
    {PriorVersion, "prior_version", "http://www.w3.org/2002/07/owl#priorVersion", "", Recommended,
     ExpectedNode::Iri},
    {NamespaceUri, "namespace_uri", "http://purl.org/vocab/vann/preferredNamespaceUri", "",
     Recommended, ExpectedNode::Any},
    {VersionIri, "version_iri", "http://www.w3.org/2002/07/owl#versionIRI", "", Recommended,
     ExpectedNode::Iri},
    {Prefix, "prefix", "http://purl.org/vocab/vann/preferredNamespacePrefix", "", Recommended,
     ExpectedNode::Literal},
    {Title, "title", "http://purl.org/dc/terms/title", "", Recommended, ExpectedNode::Literal},
    {Description, "description", "http://purl.org/dc/terms/description", "", Recommended,
     ExpectedNode::Literal},
    {Citation, "citation", "http://purl.org/dc/terms/bibliographicCitation", "", Recommended,
     ExpectedNode::Literal},
    {Abstract, "abstract", "http://purl.org/dc/terms/abstract", "", Optional, ExpectedNode::Literal},
    {SeeAlso, "see_also", "http://www.w3.org/2000/01/rdf-schema#seeAlso", "", Optional,
     ExpectedNode::Iri},
    {Status, "status", "http://www.w3.org/2003/06/sw-vocab-status/ns#status", "", Optional,
     ExpectedNode::Any},
    {BackwardCompat, "backward_compatibility", "http://www.w3.org/2002/07/owl#backwardCompatibleWith",
     "http://www.w3.org/2002/07/owl#backwardCompatibility", Optional, ExpectedNode::Iri},
    {IncompatibleWith, "incompatible_with", "http://www.w3.org/2002/07/owl#incompatibleWith", "",
     Optional, ExpectedNode::Iri},
    {Modified, "modified", "http://purl.org/dc/terms/modified", "", Optional, ExpectedNode::Literal},
    {Issued, "issued", "http://purl.org/dc/terms/issued", "", Optional, ExpectedNode::Literal},
    {Source, "source", "http://purl.org/dc/terms/source", "", Optional, ExpectedNode::Any},
    {Publisher, "publisher", "http://purl.org/dc/terms/publisher", "http://purl.org/dc/terms/published",
     Optional, ExpectedNode::Any},
    {Doi, "doi", "http://purl.org/ontology/bibo/doi", "", Optional, ExpectedNode::Literal},
    {Logo, "logo", "http://xmlns.com/foaf/0.1/logo", "", Optional, ExpectedNode::Iri},
    {Diagram, "diagram", "http://xmlns.com/foaf/0.1/depiction", "", Optional, ExpectedNode::Iri},
    {VersionInfo, "version_info", "http://www.w3.org/2002/07/owl#versionInfo", "", Informational,
     ExpectedNode::Literal},
}};

// Prefixes whose registration is well established; reusing them for a
// different namespace confuses readers.
constexpr std::array<std::pair<std::string_view, std::string_view>, 20> kKnownPrefixes{{
    {"bibo", "http://purl.org/ontology/bibo/"},
    {"dc", "http://purl.org/dc/elements/1.1/"},
    {"dcat", "http://www.w3.org/ns/dcat#"},
    {"dcterms", "http://purl.org/dc/terms/"},
    {"ex", "http://example.org/"},
    {"example", "http://example.org/"},
    {"foaf", "http://xmlns.com/foaf/0.1/"},
    {"geo", "http://www.w3.org/2003/01/geo/wgs84_pos#"},
    {"org", "http://www.w3.org/ns/org#"},
    {"owl", "http://www.w3.org/2002/07/owl#"},
    {"prov", "http://www.w3.org/ns/prov#"},
    {"rdf", "http://www.w3.org/1999/02/22-rdf-syntax-ns#"},
    {"rdfs", "http://www.w3.org/2000/01/rdf-schema#"},
    {"schema", "http://schema.org/"},
    {"sh", "http://www.w3.org/ns/shacl#"},
    {"skos", "http://www.w3.org/2004/02/skos/core#"},
    {"time", "http://www.w3.org/2006/time#"},
    {"vann", "http://purl.org/vocab/vann/"},
    {"void", "http://rdfs.org/ns/void#"},
    {"xsd", "http://www.w3.org/2001/XMLSchema#"},
}};

std::vector<std::string> display_values(const std::vector<MetadataValue>& values) {
    std::vector<std::string> out;
    for (const auto& v : values) out.push_back(v.value.display());
    return out;
}

std::string check_id(const FieldSpec& spec) { return "metadata." + std::string(spec.key); }

bool is_major_release(std::string_view version_info) {
    try {
        SemVer v = parse_semver(version_info);
        return v.minor == 0 && v.patch == 0;
    } catch (const MalformedVersion&) {
        return false;
    }
}

}  // namespace

std::span<const FieldSpec> metadata_fields() { return kFields; }

const FieldSpec& field_spec(MetadataField field) { return kFields[static_cast<std::size_t>(field)]; }

AliasTable default_aliases() {
    const std::vector<std::pair<MetadataField, std::string_view>> pairs{
        {License, "license"},       {Creator, "creator"},         {Creator, "author"},
        {Contributor, "contributor"}, {Created, "dateCreated"},   {Title, "name"},
        {Description, "description"}, {Citation, "citation"},     {Abstract, "abstract"},
        {Modified, "dateModified"},  {Issued, "datePublished"},   {Source, "isBasedOn"},
        {Publisher, "publisher"},
    };
    AliasTable table;
    for (const auto& [field, local] : pairs) {
        table[field].push_back(std::string(vocab::kSchema) + std::string(local));
        table[field].push_back(std::string(vocab::kSchemaHttps) + std::string(local));
    }
    return table;
}

std::string OntologyMetadata::first(MetadataField f) const {
    const auto& values = get(f);
    return values.empty() ? std::string() : values.front().value.value;
}

OntologyMetadata extract_metadata(const rdf::OntologyModel& model, const AliasTable& aliases) {
    OntologyMetadata meta;
    meta.ontology_iri = model.ontology_iri();
    std::set<std::string> mapped;
    for (const auto& spec : kFields) {
        std::vector<std::string> properties{std::string(spec.property)};
        if (!spec.variant.empty()) properties.emplace_back(spec.variant);
        if (auto it = aliases.find(spec.field); it != aliases.end())
            properties.insert(properties.end(), it->second.begin(), it->second.end());
        auto& field = meta.get(spec.field);
        for (const auto& p : properties) {
            if (!mapped.insert(p).second) continue;
            for (auto& value : rdf::get_annotations(model, model.ontology_iri(), p))
                field.push_back({std::move(value), p});
        }
    }
    for (const auto& t : model.about(rdf::Term::iri(model.ontology_iri()))) {
        if (t.predicate.value == vocab::kRdfType || t.predicate.value == vocab::kOwlImports) continue;
        if (!mapped.count(t.predicate.value)) ++meta.unmapped_annotations;
    }
    return meta;
}

std::vector<CheckResult> check_recommended_metadata(const OntologyMetadata& meta) {
    std::vector<CheckResult> out;
    for (const auto& spec : kFields) {
        if (spec.guideline != Recommended) continue;
        const auto& values = meta.get(spec.field);
        std::string id = check_id(spec);
        if (!values.empty()) {
            out.push_back(make_result(id, Status::Pass, std::string(spec.property) + " present",
                                      display_values(values)));
            continue;
        }
        if (spec.field == PriorVersion) {
            std::string info = meta.first(VersionInfo);
            if (info.empty()) {
                out.push_back(make_result(id, Status::Warn,
                                          "no owl:priorVersion and no owl:versionInfo; cannot tell "
                                          "whether this is a first release"));
                continue;
            }
            if (is_major_release(info)) {
                out.push_back(make_result(id, Status::Warn,
                                          "no owl:priorVersion; version " + info +
                                              " is a major release that may have no predecessor",
                                          {info}));
                continue;
            }
            try {
                (void)parse_semver(info);
            } catch (const MalformedVersion&) {
                out.push_back(make_result(id, Status::Warn,
                                          "no owl:priorVersion; version '" + info +
                                              "' is not semantic, predecessor indeterminate",
                                          {info}));
                continue;
            }
        }
        out.push_back(make_result(id, Status::Fail, std::string(spec.property) + " missing"));
    }
    return out;
}

std::vector<CheckResult> check_optional_metadata(const OntologyMetadata& meta) {
    std::vector<CheckResult> out;
    for (const auto& spec : kFields) {
        if (spec.guideline != Optional) continue;
        const auto& values = meta.get(spec.field);
        if (values.empty())
            out.push_back(make_result(check_id(spec), Status::Info,
                                      std::string(spec.property) + " not declared"));
        else
            out.push_back(make_result(check_id(spec), Status::Pass,
                                      std::string(spec.property) + " present",
                                      display_values(values)));
    }
    return out;
}

std::vector<CheckResult> check_metadata_hygiene(const OntologyMetadata& meta) {
    std::vector<CheckResult> out;
    for (auto field : {Publisher, BackwardCompat}) {
        const auto& spec = field_spec(field);
        std::string id = "metadata.spelling." + std::string(spec.key);
        bool standard = false;
        bool variant = false;
        for (const auto& v : meta.get(field)) {
            standard |= v.property == spec.property;
            variant |= v.property == spec.variant;
        }
        if (standard)
            out.push_back(make_result(id, Status::Pass, "uses " + std::string(spec.property)));
        else if (variant)
            out.push_back(make_result(id, Status::Warn,
                                      "found " + std::string(spec.variant) +
                                          "; the standard property is " + std::string(spec.property),
                                      {std::string(spec.variant)}));
        else
            out.push_back(make_result(id, Status::Info, "property not used"));
    }

    std::vector<std::string> offending;
    for (const auto& spec : kFields) {
        for (const auto& v : meta.get(spec.field)) {
            bool bad = (spec.expected == ExpectedNode::Iri && !v.value.is_iri()) ||
                       (spec.expected == ExpectedNode::Literal && !v.value.is_literal());
            if (bad) offending.push_back(std::string(spec.key) + " = " + v.value.display());
        }
    }
    if (offending.empty())
        out.push_back(make_result("metadata.value_kinds", Status::Pass,
                                  "all metadata values have the expected node kind"));
    else
        out.push_back(make_result("metadata.value_kinds", Status::Warn,
                                  "metadata values with an unexpected node kind", offending));
    return out;
}

std::vector<CheckResult> check_prefix_sanity(const OntologyMetadata& meta) {
    std::vector<CheckResult> out;
    std::string prefix = meta.first(Prefix);
    if (prefix.empty()) {
        out.push_back(make_result("prefix.format", Status::Info, "no preferred prefix declared"));
        out.push_back(make_result("prefix.known_collision", Status::Info,
                                  "no preferred prefix declared"));
        return out;
    }
    std::vector<std::string> problems;
    if (prefix.size() > 10) problems.push_back("longer than 10 characters");
    if (!std::all_of(prefix.begin(), prefix.end(),
                     [](unsigned char c) { return std::isalnum(c); }))
        problems.push_back("contains non-alphanumeric characters");
    if (problems.empty()) {
        out.push_back(make_result("prefix.format", Status::Pass,
                                  "prefix '" + prefix + "' is short and simple", {prefix}));
    } else {
        std::string message = "prefix '" + prefix + "' is ";
        for (std::size_t i = 0; i < problems.size(); ++i)
            message += (i ? " and " : "") + problems[i];
        out.push_back(make_result("prefix.format", Status::Warn, message, {prefix}));
    }

    std::string ns = meta.first(NamespaceUri);
    auto known = std::find_if(kKnownPrefixes.begin(), kKnownPrefixes.end(),
                              [&](const auto& kp) { return kp.first == prefix; });
    if (known != kKnownPrefixes.end() && known->second != ns) {
        out.push_back(make_result(
            "prefix.known_collision", Status::Warn,
            "prefix '" + prefix + "' is already registered to refer to <" +
                std::string(known->second) + ">; reusing it for another namespace confuses re-users",
            {prefix, std::string(known->second)}));
    } else {
        out.push_back(make_result("prefix.known_collision", Status::Info,
                                  "no clash with well-known prefixes; registries are queried online",
                                  {prefix}));
    }
    return out;
}

}  // namespace fairvoc::audit
