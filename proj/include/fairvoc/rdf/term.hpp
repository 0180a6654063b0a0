#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace fairvoc::rdf {

enum class RdfFormat { Turtle, RdfXml, NTriples, JsonLd };

/// Canonical media type, e.g. "text/turtle".
std::string_view media_type(RdfFormat format) noexcept;

/// Inverse of media_type. Case-insensitive; media-type parameters
/// (";charset=...") are ignored.
std::optional<RdfFormat> format_from_media_type(std::string_view media_type);

/// Lower-case short name used on the command line and in config files.
std::string_view format_name(RdfFormat format) noexcept;
std::optional<RdfFormat> format_from_name(std::string_view name);

/// Conventional file extension without the dot.
std::string_view file_extension(RdfFormat format) noexcept;

/// An RDF node. Literals carry an optional datatype IRI and language tag.
struct Term {
    enum class Kind { Iri, Blank, Literal };

    Kind kind = Kind::Iri;
    std::string value;
    std::string datatype;  // literal only; empty means xsd:string / rdf:langString
    std::string language;  // literal only; lower-cased

    static Term iri(std::string value);
    static Term blank(std::string label);
    static Term literal(std::string lexical, std::string datatype = {}, std::string language = {});

    bool is_iri() const noexcept { return kind == Kind::Iri; }
    bool is_blank() const noexcept { return kind == Kind::Blank; }
    bool is_literal() const noexcept { return kind == Kind::Literal; }

    /// N-Triples rendering of the term.
    std::string to_ntriples() const;
    /// Short human form used in audit evidence: "text"@en, <iri>, _:b0.
    std::string display() const;

    auto operator<=>(const Term&) const = default;
};

struct Triple {
    Term subject;
    Term predicate;
    Term object;

    auto operator<=>(const Triple&) const = default;
};

}  // namespace fairvoc::rdf
