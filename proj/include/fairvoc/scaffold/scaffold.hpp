#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fairvoc/audit/metadata.hpp"
#include "fairvoc/audit/versioning.hpp"
#include "fairvoc/rdf/model.hpp"
#include "fairvoc/rdf/term.hpp"

namespace fairvoc::scaffold {

enum class IriStyle { Hash, Slash };

struct ScaffoldConfig {
    std::string ontology_iri;
    IriStyle termination = IriStyle::Hash;
    audit::SemVer latest_version;
    std::vector<audit::SemVer> all_versions;
    std::string doc_base_url;  // where release/ and 406.html are hosted
    std::vector<rdf::RdfFormat> supported_formats{rdf::RdfFormat::Turtle};
    std::string html_doc_filename = "index-en.html";
    std::string serialization_filename = "ontology.ttl";
    /// Ontology document copied verbatim as the latest release in its own
    /// format. Empty: every serialization is generated.
    std::string source_path;
};

/// Throws InvalidConfig naming the first violated constraint.
void validate(const ScaffoldConfig& config);

/// Reads `key = value` lines ('#' starts a comment). Keys: ontology_iri,
/// termination (hash|slash), latest_version, versions (comma separated),
/// doc_base_url, formats (turtle,rdfxml,ntriples,jsonld), html_doc_filename,
/// serialization_filename, source. The result is validated.
ScaffoldConfig parse_config(std::string_view text);

/// File name of the serialization in `format` (same stem as
/// serialization_filename).
std::string serialization_file(const ScaffoldConfig& config, rdf::RdfFormat format);

/// Apache mod_rewrite rules for content negotiation and version redirects.
std::string generate_htaccess(const ScaffoldConfig& config);

/// schema.org WebPage description for embedding in a script element.
/// Throws MissingTitle.
std::string generate_jsonld_snippet(const audit::OntologyMetadata& meta, const std::string& ontology_iri);

/// Placeholder documentation page for one release.
std::string generate_html_page(const ScaffoldConfig& config, const rdf::OntologyModel& release);

enum class SourceKind { Copy, Generated };

struct LayoutEntry {
    std::string path;  // relative to the publication root
    SourceKind kind;
    std::string source;  // input path for Copy, artifact id for Generated

    bool operator==(const LayoutEntry&) const = default;
};

struct ReleaseLayout {
    std::vector<LayoutEntry> entries;
};

ReleaseLayout plan_release(const ScaffoldConfig& config, const rdf::OntologyModel& ontology);

/// Produces the bytes of every layout entry.
std::vector<std::pair<std::string, std::string>> render_release(const ReleaseLayout& layout,
                                                                 const ScaffoldConfig& config,
                                                                 const rdf::OntologyModel& ontology);

/// Writes rendered files below `root`, creating directories.
void write_release(const std::filesystem::path& root,
                   const std::vector<std::pair<std::string, std::string>>& files);

/// Copy of the model with owl:versionIRI, owl:versionInfo and, when given,
/// owl:priorVersion set for `version`. Throws VersionInNamespace.
rdf::OntologyModel stamp_version(const rdf::OntologyModel& model, const audit::SemVer& version,
                                 const std::optional<audit::SemVer>& prior);

/// Version IRI assigned by stamp_version.
std::string version_iri(std::string_view ontology_iri, const audit::SemVer& version);

}  // namespace fairvoc::scaffold
