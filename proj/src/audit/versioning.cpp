#include "fairvoc/audit/versioning.hpp"

#include <charconv>
#include <regex>

#include "fairvoc/audit/catalog.hpp"
#include "fairvoc/error.hpp"
#include "fairvoc/rdf/iri.hpp"

namespace fairvoc::audit {

namespace {

bool parse_component(std::string_view text, std::uint64_t& out) {
    if (text.empty()) return false;
    for (char c : text)
        if (c < '0' || c > '9') return false;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

std::string SemVer::to_string() const {
    return std::to_string(major) + "." + std::to_string(minor) + "." + std::to_string(patch);
}

SemVer parse_semver(std::string_view text) {
    auto first = text.find('.');
    auto second = first == std::string_view::npos ? first : text.find('.', first + 1);
    if (second == std::string_view::npos) throw MalformedVersion(std::string(text));
    SemVer v;
    if (!parse_component(text.substr(0, first), v.major) ||
        !parse_component(text.substr(first + 1, second - first - 1), v.minor) ||
        !parse_component(text.substr(second + 1), v.patch))
        throw MalformedVersion(std::string(text));
    return v;
}

bool has_version_segment(std::string_view iri_text) {
    static const std::regex kSegment(R"([vV]?[0-9]+\.[0-9]+(\.[0-9]+)?)");
    std::string stripped = iri::strip_terminator(iri::strip_fragment(iri_text));
    auto slash = stripped.rfind('/');
    std::string last = slash == std::string::npos ? stripped : stripped.substr(slash + 1);
    return std::regex_match(last, kSegment);
}

std::vector<CheckResult> check_versioning(const OntologyMetadata& meta, std::string_view ontology_iri) {
    std::vector<CheckResult> out;
    const auto& version_iris = meta.get(MetadataField::VersionIri);
    const auto& infos = meta.get(MetadataField::VersionInfo);

    if (version_iris.empty()) {
        out.push_back(make_result("versioning.version_iri", Status::Info,
                                  "no owl:versionIRI (reported by metadata.version_iri)"));
    } else {
        std::vector<std::string> same;
        std::string root = iri::strip_terminator(ontology_iri);
        for (const auto& v : version_iris)
            if (iri::strip_terminator(v.value.value) == root) same.push_back(v.value.display());
        if (same.empty())
            out.push_back(make_result("versioning.version_iri", Status::Pass,
                                      "version IRI is independent from the ontology IRI",
                                      {version_iris.front().value.display()}));
        else
            out.push_back(make_result("versioning.version_iri", Status::Fail,
                                      "version IRI equals the ontology IRI", same));
    }

    if (infos.empty()) {
        out.push_back(make_result("versioning.semver", Status::Warn, "no owl:versionInfo declared"));
    } else {
        std::vector<std::string> malformed;
        for (const auto& v : infos) {
            try {
                (void)parse_semver(v.value.value);
            } catch (const MalformedVersion&) {
                malformed.push_back(v.value.display());
            }
        }
        if (malformed.empty())
            out.push_back(make_result("versioning.semver", Status::Pass,
                                      "owl:versionInfo follows X.Y.Z", {infos.front().value.display()}));
        else
            out.push_back(make_result("versioning.semver", Status::Fail,
                                      "owl:versionInfo is not a semantic version X.Y.Z", malformed));
    }

    if (has_version_segment(ontology_iri))
        out.push_back(make_result("versioning.version_in_namespace", Status::Fail,
                                  "ontology IRI embeds a version number; term IRIs would change on "
                                  "every release",
                                  {std::string(ontology_iri)}));
    else
        out.push_back(make_result("versioning.version_in_namespace", Status::Pass,
                                  "ontology IRI is version-independent", {std::string(ontology_iri)}));

    if (version_iris.empty() || infos.empty()) {
        out.push_back(make_result("versioning.consistency", Status::Info,
                                  "needs both owl:versionIRI and owl:versionInfo"));
    } else {
        bool consistent = false;
        for (const auto& vi : version_iris)
            for (const auto& info : infos)
                if (!info.value.value.empty() && vi.value.value.ends_with(info.value.value))
                    consistent = true;
        std::vector<std::string> values{version_iris.front().value.display(),
                                        infos.front().value.display()};
        if (consistent)
            out.push_back(make_result("versioning.consistency", Status::Pass,
                                      "version IRI ends with the version info", values));
        else
            out.push_back(make_result("versioning.consistency", Status::Fail,
                                      "version IRI does not end with the version info", values));
    }
    return out;
}

}  // namespace fairvoc::audit
