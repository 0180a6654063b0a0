#include "fairvoc/rdf/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "fairvoc/error.hpp"
#include "fairvoc/rdf/iri.hpp"
#include "fairvoc/rdf/vocab.hpp"

namespace fairvoc::rdf {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::optional<RdfFormat> format_from_hint(std::string_view hint) {
    if (auto f = format_from_media_type(hint)) return f;
    std::string h = lower(hint);
    auto dot = h.rfind('.');
    if (dot == std::string::npos) return std::nullopt;
    std::string ext = h.substr(dot + 1);
    if (ext == "ttl" || ext == "turtle") return RdfFormat::Turtle;
    if (ext == "rdf" || ext == "owl" || ext == "xml") return RdfFormat::RdfXml;
    if (ext == "nt") return RdfFormat::NTriples;
    if (ext == "jsonld" || ext == "json") return RdfFormat::JsonLd;
    return std::nullopt;
}

std::string_view skip_leading(std::string_view s) {
    if (s.starts_with("\xEF\xBB\xBF")) s.remove_prefix(3);
    for (;;) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        if (s.starts_with("#")) {
            auto nl = s.find('\n');
            s = nl == std::string_view::npos ? std::string_view{} : s.substr(nl + 1);
            continue;
        }
        return s;
    }
}

bool starts_ci(std::string_view s, std::string_view word) {
    if (s.size() < word.size()) return false;
    for (std::size_t i = 0; i < word.size(); ++i)
        if (std::toupper(static_cast<unsigned char>(s[i])) != word[i]) return false;
    return s.size() == word.size() || std::isspace(static_cast<unsigned char>(s[word.size()]));
}

void check_size(std::string_view bytes) {
    if (bytes.size() > kMaxInputBytes) throw InputTooLarge(bytes.size());
}

bool simple_local(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_' || c == '-';
    });
}

const std::vector<std::pair<std::string, std::string>>& well_known_prefixes() {
    static const std::vector<std::pair<std::string, std::string>> kPrefixes{
        {"rdf", std::string(vocab::kRdf)},         {"rdfs", std::string(vocab::kRdfs)},
        {"owl", std::string(vocab::kOwl)},         {"xsd", std::string(vocab::kXsd)},
        {"dcterms", std::string(vocab::kDcterms)}, {"vann", std::string(vocab::kVann)},
        {"bibo", std::string(vocab::kBibo)},       {"foaf", std::string(vocab::kFoaf)},
        {"sw", std::string(vocab::kSw)},           {"vaem", std::string(vocab::kVaem)},
        {"schema", std::string(vocab::kSchema)},
    };
    return kPrefixes;
}

}  // namespace

RdfFormat detect_format(std::string_view bytes, std::optional<std::string_view> hint) {
    if (hint)
        if (auto f = format_from_hint(*hint)) return *f;
    std::string_view s = skip_leading(bytes);
    if (s.empty()) throw UndetectableFormat();
    if (s.starts_with("<?xml") || s.starts_with("<rdf:RDF") || s.starts_with("<!DOCTYPE"))
        return RdfFormat::RdfXml;
    if (s.front() == '{') return RdfFormat::JsonLd;
    if (s.starts_with("@prefix") || s.starts_with("@base") || starts_ci(s, "PREFIX") ||
        starts_ci(s, "BASE"))
        return RdfFormat::Turtle;
    if (s.front() == '<' || s.starts_with("_:")) {
        try {
            (void)parse_turtle(bytes.substr(0, std::min<std::size_t>(bytes.size(), 1u << 20)));
            return RdfFormat::NTriples;
        } catch (const SyntaxError&) {
            // a truncated sample may end mid-statement; fall through
        }
        try {
            (void)parse_turtle(bytes);
            return RdfFormat::NTriples;
        } catch (const SyntaxError&) {
        }
    }
    throw UndetectableFormat();
}

std::vector<Triple> parse_triples(std::string_view bytes, RdfFormat format,
                                  std::string_view base_iri) {
    check_size(bytes);
    switch (format) {
        case RdfFormat::Turtle:
        case RdfFormat::NTriples: return parse_turtle(bytes, base_iri);
        case RdfFormat::RdfXml: return parse_rdfxml(bytes, base_iri);
        case RdfFormat::JsonLd: return parse_jsonld(bytes, base_iri);
    }
    throw UnsupportedFormat("unknown format");
}

OntologyModel parse_ontology(std::string_view bytes, RdfFormat format, std::string_view base_iri) {
    check_size(bytes);
    if (bytes.find_first_not_of(" \t\r\n") == std::string_view::npos) throw NoOntologyDeclaration();
    return OntologyModel::from_triples(parse_triples(bytes, format, base_iri));
}

std::string serialize_ntriples(std::span<const Triple> triples) {
    std::vector<std::string> lines;
    lines.reserve(triples.size());
    for (const auto& t : triples)
        lines.push_back(t.subject.to_ntriples() + " " + t.predicate.to_ntriples() + " " +
                        t.object.to_ntriples() + " .\n");
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    std::string out;
    for (const auto& l : lines) out += l;
    return out;
}

std::string serialize_turtle(std::span<const Triple> triples) {
    std::map<std::string, std::string> used;  // prefix -> namespace
    auto compact = [&](const std::string& value) -> std::optional<std::string> {
        for (const auto& [prefix, ns] : well_known_prefixes()) {
            if (value.size() > ns.size() && value.starts_with(ns) &&
                simple_local(std::string_view(value).substr(ns.size()))) {
                used[prefix] = ns;
                return prefix + ":" + value.substr(ns.size());
            }
        }
        return std::nullopt;
    };
    auto render = [&](const Term& t, bool predicate) -> std::string {
        if (predicate && t.value == vocab::kRdfType) return "a";
        if (t.is_iri()) {
            if (auto c = compact(t.value)) return *c;
            return t.to_ntriples();
        }
        if (t.is_literal() && !t.datatype.empty()) {
            Term plain = Term::literal(t.value);
            std::string dt = compact(t.datatype).value_or(Term::iri(t.datatype).to_ntriples());
            return plain.to_ntriples() + "^^" + dt;
        }
        return t.to_ntriples();
    };

    std::vector<Triple> sorted(triples.begin(), triples.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::string body;
    for (std::size_t i = 0; i < sorted.size();) {
        const Term& s = sorted[i].subject;
        body += render(s, false);
        std::size_t j = i;
        bool first_pred = true;
        while (j < sorted.size() && sorted[j].subject == s) {
            const Term& p = sorted[j].predicate;
            body += first_pred ? " " : " ;\n    ";
            first_pred = false;
            body += render(p, true) + " ";
            bool first_obj = true;
            while (j < sorted.size() && sorted[j].subject == s && sorted[j].predicate == p) {
                if (!first_obj) body += ", ";
                first_obj = false;
                body += render(sorted[j].object, false);
                ++j;
            }
        }
        body += " .\n\n";
        i = j;
    }
    std::string head;
    for (const auto& [prefix, ns] : used) head += "@prefix " + prefix + ": <" + ns + "> .\n";
    if (!head.empty()) head += "\n";
    return head + body;
}

std::string serialize(std::span<const Triple> triples, RdfFormat format) {
    switch (format) {
        case RdfFormat::Turtle: return serialize_turtle(triples);
        case RdfFormat::NTriples: return serialize_ntriples(triples);
        case RdfFormat::RdfXml: return serialize_rdfxml(triples);
        case RdfFormat::JsonLd: return serialize_jsonld(triples);
    }
    throw UnsupportedFormat("unknown format");
}

}  // namespace fairvoc::rdf
