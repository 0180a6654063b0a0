#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

// Small non-validating XML reader sufficient for RDF/XML documents:
// namespaces, CDATA, comments, processing instructions and internal DTD
// entity declarations.
namespace fairvoc::rdf::xml {

inline constexpr std::string_view kXmlNs = "http://www.w3.org/XML/1998/namespace";

struct Attribute {
    std::string ns;
    std::string local;
    std::string value;
};

struct Element {
    std::string ns;
    std::string local;
    std::vector<Attribute> attributes;
    std::vector<std::unique_ptr<Element>> children;
    std::string text;     // concatenated character data of direct text children
    std::string raw;      // unparsed content between start and end tag
    std::size_t line = 0;
    std::size_t column = 0;

    std::string iri() const { return ns + local; }
    const Attribute* find(std::string_view ns, std::string_view local) const;
};

/// Parses a document and returns its root element. Throws SyntaxError.
std::unique_ptr<Element> parse(std::string_view text);

}  // namespace fairvoc::rdf::xml
