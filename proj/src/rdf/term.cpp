#include "fairvoc/rdf/term.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdio>

#include "fairvoc/rdf/vocab.hpp"

namespace fairvoc::rdf {

namespace {

struct FormatInfo {
    RdfFormat format;
    std::string_view media_type;
    std::string_view name;
    std::string_view extension;
};

constexpr std::array<FormatInfo, 4> kFormats{{
    {RdfFormat::Turtle, "text/turtle", "turtle", "ttl"},
    {RdfFormat::RdfXml, "application/rdf+xml", "rdfxml", "rdf"},
    {RdfFormat::NTriples, "application/n-triples", "ntriples", "nt"},
    {RdfFormat::JsonLd, "application/ld+json", "jsonld", "jsonld"},
}};

const FormatInfo& info(RdfFormat format) noexcept {
    return kFormats[static_cast<std::size_t>(format)];
}

std::string lower(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

void escape_into(std::string& out, std::string_view text, bool iri) {
    for (unsigned char c : text) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '"':
                out += iri ? "\\u0022" : "\\\"";
                break;
            case '\n': out += iri ? "\\u000A" : "\\n"; break;
            case '\r': out += iri ? "\\u000D" : "\\r"; break;
            case '\t': out += iri ? "\\u0009" : "\\t"; break;
            default:
                if (c < 0x20 || (iri && (c == '<' || c == '>' || c == ' ' || c == '{' || c == '}' ||
                                         c == '|' || c == '^' || c == '`'))) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04X", c);
                    out += buf;
                } else {
                    out += static_cast<char>(c);
                }
        }
    }
}

}  // namespace

std::string_view media_type(RdfFormat format) noexcept { return info(format).media_type; }

std::optional<RdfFormat> format_from_media_type(std::string_view text) {
    auto semi = text.find(';');
    std::string key = lower(trim(text.substr(0, semi)));
    for (const auto& f : kFormats)
        if (f.media_type == key) return f.format;
    return std::nullopt;
}

std::string_view format_name(RdfFormat format) noexcept { return info(format).name; }

std::optional<RdfFormat> format_from_name(std::string_view name) {
    std::string key = lower(trim(name));
    for (const auto& f : kFormats)
        if (f.name == key) return f.format;
    return std::nullopt;
}

std::string_view file_extension(RdfFormat format) noexcept { return info(format).extension; }

Term Term::iri(std::string value) { return Term{Kind::Iri, std::move(value), {}, {}}; }

Term Term::blank(std::string label) { return Term{Kind::Blank, std::move(label), {}, {}}; }

Term Term::literal(std::string lexical, std::string datatype, std::string language) {
    Term t{Kind::Literal, std::move(lexical), std::move(datatype), lower(language)};
    if (!t.language.empty() || t.datatype == vocab::kXsdString ||
        t.datatype == vocab::kRdfLangString)
        t.datatype.clear();
    return t;
}

std::string Term::to_ntriples() const {
    std::string out;
    switch (kind) {
        case Kind::Iri:
            out += '<';
            escape_into(out, value, true);
            out += '>';
            break;
        case Kind::Blank:
            out += "_:" + value;
            break;
        case Kind::Literal:
            out += '"';
            escape_into(out, value, false);
            out += '"';
            if (!language.empty()) {
                out += '@' + language;
            } else if (!datatype.empty()) {
                out += "^^<";
                escape_into(out, datatype, true);
                out += '>';
            }
            break;
    }
    return out;
}

std::string Term::display() const {
    switch (kind) {
        case Kind::Iri: return "<" + value + ">";
        case Kind::Blank: return "_:" + value;
        case Kind::Literal: break;
    }
    std::string out = "\"" + value + "\"";
    if (!language.empty()) out += "@" + language;
    return out;
}

}  // namespace fairvoc::rdf
