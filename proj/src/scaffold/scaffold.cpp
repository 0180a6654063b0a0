#include "fairvoc/scaffold/scaffold.hpp"

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "fairvoc/error.hpp"
#include "fairvoc/rdf/iri.hpp"
#include "fairvoc/rdf/parse.hpp"
#include "fairvoc/rdf/vocab.hpp"

namespace fairvoc::scaffold {
namespace {

using audit::MetadataField;
using audit::SemVer;
using rdf::RdfFormat;

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(std::string_view s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in{std::string(s)};
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::string regex_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (std::string_view(".+*?^$()[]{}|\\").find(c) != std::string_view::npos) out += '\\';
        out += c;
    }
    return out;
}

std::string html_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

// Accept-header conditions selecting each serialization.
std::vector<std::string> conditions_for(RdfFormat format) {
    switch (format) {
        case RdfFormat::Turtle:
            return {"RewriteCond %{HTTP_ACCEPT} text/turtle [OR]", "RewriteCond %{HTTP_ACCEPT} text/\\* [OR]",
                    "RewriteCond %{HTTP_ACCEPT} \\*/turtle"};
        case RdfFormat::RdfXml:
            return {"RewriteCond %{HTTP_ACCEPT} application/rdf\\+xml"};
        case RdfFormat::NTriples:
            return {"RewriteCond %{HTTP_ACCEPT} application/n-triples"};
        case RdfFormat::JsonLd:
            return {"RewriteCond %{HTTP_ACCEPT} application/ld\\+json"};
    }
    return {};
}

std::vector<std::string> html_conditions(bool rdfxml_supported) {
    std::vector<std::string> out;
    // browsers listing RDF/XML ahead of HTML want RDF/XML
    if (rdfxml_supported)
        out.push_back("RewriteCond %{HTTP_ACCEPT} !application/rdf\\+xml.*(text/html|application/xhtml\\+xml)");
    out.insert(out.end(), {"RewriteCond %{HTTP_ACCEPT} text/html [OR]",
                           "RewriteCond %{HTTP_ACCEPT} application/xhtml\\+xml [OR]",
                           "RewriteCond %{HTTP_USER_AGENT} ^Mozilla/.*"});
    return out;
}

bool supports(const ScaffoldConfig& c, RdfFormat f) {
    return std::find(c.supported_formats.begin(), c.supported_formats.end(), f) != c.supported_formats.end();
}

std::vector<SemVer> sorted_versions(const ScaffoldConfig& c) {
    auto v = c.all_versions;
    std::sort(v.begin(), v.end());
    return v;
}

std::string release_url(const ScaffoldConfig& c, const std::string& version, const std::string& file) {
    return iri::strip_terminator(c.doc_base_url) + "/release/" + version + "/" + file;
}

bool valid_filename(const std::string& name) {
    return !name.empty() && name.find_first_of("/\\ \t\r\n") == std::string::npos;
}

// Preferred display value: English, then untagged, then anything.
std::string pick_text(const std::vector<audit::MetadataValue>& values) {
    const audit::MetadataValue* best = nullptr;
    auto rank = [](const rdf::Term& t) { return t.language == "en" ? 0 : t.language.empty() ? 1 : 2; };
    for (const auto& v : values)
        if (!best || rank(v.value) < rank(best->value)) best = &v;
    return best ? best->value.value : std::string();
}

}  // namespace

void validate(const ScaffoldConfig& c) {
    if (!iri::is_absolute(c.ontology_iri)) throw InvalidConfig("ontology_iri must be an absolute IRI");
    if (c.ontology_iri.find_first_of(" \t\r\n<>\"") != std::string::npos)
        throw InvalidConfig("ontology_iri contains characters not allowed in an IRI");
    char last = c.ontology_iri.back();
    if (last == '#' && c.termination != IriStyle::Hash)
        throw InvalidConfig("ontology_iri ends with '#' but termination is slash");
    if (last == '/' && c.termination != IriStyle::Slash)
        throw InvalidConfig("ontology_iri ends with '/' but termination is hash");
    if (c.all_versions.empty()) throw InvalidConfig("at least one version is required");
    std::set<SemVer> unique(c.all_versions.begin(), c.all_versions.end());
    if (unique.size() != c.all_versions.size()) throw InvalidConfig("versions are listed more than once");
    if (!unique.count(c.latest_version))
        throw InvalidConfig("latest_version " + c.latest_version.to_string() + " is not among the versions");
    auto scheme = c.doc_base_url.substr(0, c.doc_base_url.find(':'));
    if ((scheme != "http" && scheme != "https") || !iri::is_absolute(c.doc_base_url) ||
        c.doc_base_url.find_first_of(" \t\r\n") != std::string::npos)
        throw InvalidConfig("doc_base_url must be an http(s) URL");
    if (!supports(c, RdfFormat::Turtle)) throw InvalidConfig("Turtle must be among the supported formats");
    if (!valid_filename(c.html_doc_filename)) throw InvalidConfig("html_doc_filename must be a plain file name");
    if (!valid_filename(c.serialization_filename))
        throw InvalidConfig("serialization_filename must be a plain file name");
    if (audit::has_version_segment(c.ontology_iri)) throw VersionInNamespace(c.ontology_iri);
}

ScaffoldConfig parse_config(std::string_view text) {
    ScaffoldConfig c;
    std::optional<std::string> termination;
    std::istringstream in{std::string(text)};
    int line_no = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        auto hash = line.find('#');
        // '#' inside an IRI value is data, so only a leading '#' starts a comment
        if (hash != std::string::npos && trim(line.substr(0, hash)).empty()) continue;
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw InvalidConfig("line " + std::to_string(line_no) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "ontology_iri") {
                c.ontology_iri = value;
            } else if (key == "termination") {
                termination = value;
            } else if (key == "latest_version") {
                c.latest_version = audit::parse_semver(value);
            } else if (key == "versions") {
                c.all_versions.clear();
                for (const auto& v : split_list(value)) c.all_versions.push_back(audit::parse_semver(v));
            } else if (key == "doc_base_url") {
                c.doc_base_url = value;
            } else if (key == "formats") {
                c.supported_formats.clear();
                for (const auto& f : split_list(value)) {
                    auto format = rdf::format_from_name(f);
                    if (!format) throw InvalidConfig("unknown format '" + f + "'");
                    c.supported_formats.push_back(*format);
                }
            } else if (key == "html_doc_filename") {
                c.html_doc_filename = value;
            } else if (key == "serialization_filename") {
                c.serialization_filename = value;
            } else if (key == "source") {
                c.source_path = value;
            } else {
                throw InvalidConfig("unknown key '" + key + "'");
            }
        } catch (const MalformedVersion& e) {
            throw InvalidConfig("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (termination) {
        if (*termination == "hash")
            c.termination = IriStyle::Hash;
        else if (*termination == "slash")
            c.termination = IriStyle::Slash;
        else
            throw InvalidConfig("termination must be hash or slash");
    } else if (!c.ontology_iri.empty() && c.ontology_iri.back() == '/') {
        c.termination = IriStyle::Slash;
    }
    if (c.all_versions.empty() && c.latest_version != SemVer{}) c.all_versions.push_back(c.latest_version);
    validate(c);
    return c;
}

std::string serialization_file(const ScaffoldConfig& config, RdfFormat format) {
    const std::string& name = config.serialization_filename;
    auto dot = name.rfind('.');
    std::string stem = dot == std::string::npos || dot == 0 ? name : name.substr(0, dot);
    if (format == RdfFormat::Turtle) return name;
    return stem + "." + std::string(rdf::file_extension(format));
}

std::string generate_htaccess(const ScaffoldConfig& c) {
    validate(c);
    const bool rdfxml = supports(c, RdfFormat::RdfXml);
    const std::string latest = c.latest_version.to_string();
    std::string versions;
    for (const auto& v : sorted_versions(c)) versions += (versions.empty() ? "" : "|") + regex_escape(v.to_string());
    const std::string version_pattern = "^(" + versions + ")/?$";
    const std::string base = iri::strip_terminator(c.doc_base_url);

    std::ostringstream out;
    auto rule = [&](const std::vector<std::string>& conds, const std::string& pattern, const std::string& target,
                    const std::string& flags) {
        for (const auto& cond : conds) out << cond << "\n";
        out << "RewriteRule " << pattern << " " << target << " [" << flags << "]\n\n";
    };

    out << "# Content negotiation for " << c.ontology_iri << "\n";
    out << "# Turn off MultiViews\n";
    out << "Options -MultiViews\n\n";
    out << "# Media types beyond the server defaults\n";
    for (auto f : c.supported_formats)
        if (f != RdfFormat::RdfXml)
            out << "AddType " << rdf::media_type(f) << " ." << rdf::file_extension(f) << "\n";
    out << "RewriteEngine on\n\n";

    out << "# Latest version, HTML documentation\n";
    rule(html_conditions(rdfxml), "^$", release_url(c, latest, c.html_doc_filename), "R=303,L");
    for (auto f : c.supported_formats) {
        out << "# Latest version, " << rdf::media_type(f) << "\n";
        rule(conditions_for(f), "^$", release_url(c, latest, serialization_file(c, f)), "R=303,L");
    }
    out << "# Particular versions, HTML documentation\n";
    rule(html_conditions(rdfxml), version_pattern, release_url(c, "$1", c.html_doc_filename), "R=303,L");
    for (auto f : c.supported_formats) {
        out << "# Particular versions, " << rdf::media_type(f) << "\n";
        rule(conditions_for(f), version_pattern, release_url(c, "$1", serialization_file(c, f)), "R=303,L");
    }
    out << "# Explicitly requested formats that are not served\n";
    rule({"RewriteCond %{HTTP_ACCEPT} !(^$|\\*/\\*)"}, "^(.*)$", base + "/406.html", "R=406,L");
    out << "# Particular versions without a preference: Turtle\n";
    rule({}, version_pattern, release_url(c, "$1", serialization_file(c, RdfFormat::Turtle)), "R=303,L");
    out << "# No preference: Turtle\n";
    std::string text = out.str();
    text += "RewriteRule ^$ " + release_url(c, latest, serialization_file(c, RdfFormat::Turtle)) + " [R=303,L]\n";
    return text;
}

std::string generate_jsonld_snippet(const audit::OntologyMetadata& meta, const std::string& ontology_iri) {
    if (!meta.has(MetadataField::Title)) throw MissingTitle();
    nlohmann::ordered_json doc;
    doc["@context"] = "http://schema.org";
    doc["@type"] = "WebPage";
    doc["url"] = ontology_iri;
    doc["name"] = pick_text(meta.get(MetadataField::Title));
    if (meta.has(MetadataField::Issued))
        doc["datePublished"] = meta.first(MetadataField::Issued);
    else if (meta.has(MetadataField::Created))
        doc["datePublished"] = meta.first(MetadataField::Created);
    if (meta.has(MetadataField::VersionInfo)) doc["version"] = meta.first(MetadataField::VersionInfo);
    if (meta.has(MetadataField::License)) doc["license"] = meta.first(MetadataField::License);
    if (meta.has(MetadataField::Creator)) {
        auto authors = nlohmann::ordered_json::array();
        for (const auto& v : meta.get(MetadataField::Creator)) {
            nlohmann::ordered_json person;
            person["@type"] = "Person";
            if (v.value.is_iri())
                person["@id"] = v.value.value;
            else
                person["name"] = v.value.value;
            authors.push_back(person);
        }
        doc["author"] = authors;
    }
    // "</" inside a JSON string would close the surrounding <script> element
    std::string text = doc.dump(2);
    for (auto pos = text.find("</"); pos != std::string::npos; pos = text.find("</", pos + 3))
        text.replace(pos, 2, "<\\/");
    return text;
}

std::string generate_html_page(const ScaffoldConfig& c, const rdf::OntologyModel& release) {
    auto meta = audit::extract_metadata(release);
    std::string snippet = generate_jsonld_snippet(meta, c.ontology_iri);
    std::string title = pick_text(meta.get(MetadataField::Title));
    std::string version = meta.first(MetadataField::VersionInfo);
    std::ostringstream out;
    out << "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n";
    out << "<title>" << html_escape(title) << (version.empty() ? "" : " " + html_escape(version)) << "</title>\n";
    out << "<script type=\"application/ld+json\">\n" << snippet << "\n</script>\n</head>\n<body>\n";
    out << "<h1>" << html_escape(title) << "</h1>\n";
    out << "<p>IRI: <code>" << html_escape(c.ontology_iri) << "</code>";
    if (!version.empty()) out << "<br>Version: " << html_escape(version);
    out << "</p>\n";
    if (meta.has(MetadataField::Description))
        out << "<p>" << html_escape(pick_text(meta.get(MetadataField::Description))) << "</p>\n";
    out << "<ul>\n";
    for (auto f : c.supported_formats) {
        auto file = serialization_file(c, f);
        out << "<li><a href=\"" << html_escape(file) << "\">" << rdf::media_type(f) << "</a></li>\n";
    }
    out << "</ul>\n</body>\n</html>\n";
    return out.str();
}

ReleaseLayout plan_release(const ScaffoldConfig& c, const rdf::OntologyModel& ontology) {
    validate(c);
    if (iri::strip_terminator(ontology.ontology_iri()) != iri::strip_terminator(c.ontology_iri))
        throw InvalidConfig("ontology declares " + ontology.ontology_iri() + " but the configuration names " +
                            c.ontology_iri);
    std::optional<RdfFormat> source_format;
    if (!c.source_path.empty()) {
        auto dot = c.source_path.rfind('.');
        if (dot != std::string::npos) source_format = rdf::format_from_name(c.source_path.substr(dot + 1));
        if (!source_format) {
            std::string ext = dot == std::string::npos ? "" : c.source_path.substr(dot + 1);
            if (ext == "ttl") source_format = RdfFormat::Turtle;
            else if (ext == "rdf" || ext == "owl") source_format = RdfFormat::RdfXml;
            else if (ext == "nt") source_format = RdfFormat::NTriples;
        }
    }

    ReleaseLayout layout;
    layout.entries.push_back({".htaccess", SourceKind::Generated, "htaccess"});
    layout.entries.push_back({"406.html", SourceKind::Generated, "page:406"});
    for (const auto& v : sorted_versions(c)) {
        std::string dir = "release/" + v.to_string() + "/";
        for (auto f : c.supported_formats) {
            if (v == c.latest_version && source_format == f)
                layout.entries.push_back({dir + serialization_file(c, f), SourceKind::Copy, c.source_path});
            else
                layout.entries.push_back({dir + serialization_file(c, f), SourceKind::Generated,
                                          "serialization:" + std::string(rdf::format_name(f)) + ":" + v.to_string()});
        }
        layout.entries.push_back({dir + c.html_doc_filename, SourceKind::Generated, "page:" + v.to_string()});
    }
    std::set<std::string> paths;
    for (const auto& e : layout.entries)
        if (!paths.insert(e.path).second) throw InvalidConfig("two release files map to " + e.path);
    return layout;
}

std::vector<std::pair<std::string, std::string>> render_release(const ReleaseLayout& layout,
                                                                 const ScaffoldConfig& c,
                                                                 const rdf::OntologyModel& ontology) {
    auto versions = sorted_versions(c);
    auto stamped = [&](const std::string& version) {
        SemVer v = audit::parse_semver(version);
        std::optional<SemVer> prior;
        auto it = std::lower_bound(versions.begin(), versions.end(), v);
        if (it != versions.begin()) prior = *std::prev(it);
        return stamp_version(ontology, v, prior);
    };

    std::vector<std::pair<std::string, std::string>> files;
    for (const auto& e : layout.entries) {
        std::string content;
        if (e.kind == SourceKind::Copy) {
            std::ifstream in(e.source, std::ios::binary);
            if (!in) throw InvalidConfig("cannot read source ontology " + e.source);
            std::ostringstream ss;
            ss << in.rdbuf();
            content = ss.str();
        } else if (e.source == "htaccess") {
            content = generate_htaccess(c);
        } else if (e.source == "page:406") {
            content = "<!DOCTYPE html>\n<html lang=\"en\">\n<head><meta charset=\"utf-8\"><title>406 Not Acceptable</title></head>\n"
                      "<body>\n<h1>406 Not Acceptable</h1>\n<p>The requested serialization of <code>" +
                      html_escape(c.ontology_iri) + "</code> is not available. Available formats:</p>\n<ul>\n";
            content += "<li>text/html</li>\n";
            for (auto f : c.supported_formats) content += "<li>" + std::string(rdf::media_type(f)) + "</li>\n";
            content += "</ul>\n</body>\n</html>\n";
        } else if (e.source.rfind("page:", 0) == 0) {
            content = generate_html_page(c, stamped(e.source.substr(5)));
        } else if (e.source.rfind("serialization:", 0) == 0) {
            auto rest = e.source.substr(14);
            auto colon = rest.find(':');
            auto format = rdf::format_from_name(rest.substr(0, colon));
            if (!format) throw Error("unknown artifact " + e.source);
            auto model = stamped(rest.substr(colon + 1));
            content = rdf::serialize(model.triples(), *format);
        } else {
            throw Error("unknown artifact " + e.source);
        }
        files.emplace_back(e.path, std::move(content));
    }
    return files;
}

void write_release(const std::filesystem::path& root, const std::vector<std::pair<std::string, std::string>>& files) {
    for (const auto& [path, content] : files) {
        auto target = root / path;
        std::filesystem::create_directories(target.parent_path());
        std::ofstream out(target, std::ios::binary);
        out << content;
        if (!out) throw Error("cannot write " + target.string());
    }
}

std::string version_iri(std::string_view ontology_iri, const SemVer& version) {
    return iri::strip_terminator(ontology_iri) + "/" + version.to_string();
}

rdf::OntologyModel stamp_version(const rdf::OntologyModel& model, const SemVer& version,
                                 const std::optional<SemVer>& prior) {
    const std::string& onto = model.ontology_iri();
    if (audit::has_version_segment(onto)) throw VersionInNamespace(onto);
    const rdf::Term subject = rdf::Term::iri(onto);
    std::vector<rdf::Triple> triples;
    for (const auto& t : model.triples()) {
        if (t.subject == subject) {
            const auto& p = t.predicate.value;
            if (p == vocab::kOwlVersionIri || p == vocab::kOwlVersionInfo) continue;
            if (prior && p == vocab::kOwlPriorVersion) continue;
        }
        triples.push_back(t);
    }
    const auto pred = [](std::string_view p) { return rdf::Term::iri(std::string(p)); };
    triples.push_back({subject, pred(vocab::kOwlVersionIri), rdf::Term::iri(version_iri(onto, version))});
    triples.push_back({subject, pred(vocab::kOwlVersionInfo), rdf::Term::literal(version.to_string(), {}, "en")});
    if (prior)
        triples.push_back({subject, pred(vocab::kOwlPriorVersion), rdf::Term::iri(version_iri(onto, *prior))});
    return rdf::OntologyModel::from_triples(std::move(triples));
}

}  // namespace fairvoc::scaffold
