#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fairvoc/audit/check.hpp"
#include "fairvoc/rdf/model.hpp"

namespace fairvoc::audit {

/// Ontology-level metadata fields: the 23 rows of the recommended/optional
/// metadata table plus owl:versionInfo.
enum class MetadataField {
    // recommended
    License,
    Creator,
    Contributor,
    Created,
    PriorVersion,
    NamespaceUri,
    VersionIri,
    Prefix,
    Title,
    Description,
    Citation,
    // optional
    Abstract,
    SeeAlso,
    Status,
    BackwardCompat,
    IncompatibleWith,
    Modified,
    Issued,
    Source,
    Publisher,
    Doi,
    Logo,
    Diagram,
    // not a table row
    VersionInfo,
};

inline constexpr std::size_t kMetadataFieldCount = 24;
inline constexpr std::size_t kRecommendedRowCount = 11;
inline constexpr std::size_t kOptionalRowCount = 12;

enum class ExpectedNode { Any, Iri, Literal };

struct FieldSpec {
    MetadataField field;
    std::string_view key;       // check id suffix, e.g. "license"
    std::string_view property;  // standard IRI
    std::string_view variant;   // alternative spelling accepted as-is, may be empty
    Severity guideline;
    ExpectedNode expected;
};

std::span<const FieldSpec> metadata_fields();
const FieldSpec& field_spec(MetadataField field);

/// Equivalent properties accepted per field (e.g. schema.org alternates).
using AliasTable = std::map<MetadataField, std::vector<std::string>>;
AliasTable default_aliases();

struct MetadataValue {
    rdf::Term value;
    std::string property;  // IRI of the triple that supplied the value

    bool operator==(const MetadataValue&) const = default;
};

struct OntologyMetadata {
    std::string ontology_iri;
    std::array<std::vector<MetadataValue>, kMetadataFieldCount> fields;
    /// Ontology-level annotation triples that map to no field.
    std::size_t unmapped_annotations = 0;

    const std::vector<MetadataValue>& get(MetadataField f) const {
        return fields[static_cast<std::size_t>(f)];
    }
    std::vector<MetadataValue>& get(MetadataField f) { return fields[static_cast<std::size_t>(f)]; }
    bool has(MetadataField f) const { return !get(f).empty(); }
    /// First value's lexical form, or empty.
    std::string first(MetadataField f) const;
};

OntologyMetadata extract_metadata(const rdf::OntologyModel& model,
                                  const AliasTable& aliases = default_aliases());

std::vector<CheckResult> check_recommended_metadata(const OntologyMetadata& meta);
std::vector<CheckResult> check_optional_metadata(const OntologyMetadata& meta);

/// Spelling variants and node-kind anomalies.
std::vector<CheckResult> check_metadata_hygiene(const OntologyMetadata& meta);

std::vector<CheckResult> check_prefix_sanity(const OntologyMetadata& meta);

}  // namespace fairvoc::audit
