#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fairvoc/rdf/model.hpp"
#include "fairvoc/rdf/term.hpp"

namespace fairvoc::rdf {

inline constexpr std::size_t kMaxInputBytes = 64u * 1024u * 1024u;

/// Guesses the serialization. A hint (file name, extension or media type)
/// wins over content sniffing. Throws UndetectableFormat.
RdfFormat detect_format(std::string_view bytes, std::optional<std::string_view> hint = std::nullopt);

/// Parses any RDF graph, without requiring an ontology header.
/// Throws SyntaxError, InputTooLarge.
std::vector<Triple> parse_triples(std::string_view bytes, RdfFormat format,
                                  std::string_view base_iri = {});

/// parse_triples followed by OntologyModel::from_triples.
OntologyModel parse_ontology(std::string_view bytes, RdfFormat format,
                             std::string_view base_iri = {});

std::string serialize_ntriples(std::span<const Triple> triples);
std::string serialize(std::span<const Triple> triples, RdfFormat format);

// Per-format entry points, exposed for tests.
std::vector<Triple> parse_turtle(std::string_view text, std::string_view base_iri = {});
std::vector<Triple> parse_rdfxml(std::string_view text, std::string_view base_iri = {});
std::vector<Triple> parse_jsonld(std::string_view text, std::string_view base_iri = {});

std::string serialize_turtle(std::span<const Triple> triples);
std::string serialize_rdfxml(std::span<const Triple> triples);
std::string serialize_jsonld(std::span<const Triple> triples);

}  // namespace fairvoc::rdf
