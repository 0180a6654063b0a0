#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fairvoc/rdf/model.hpp"

namespace fairvoc::diagram {

/// Arrows renders the compact .i variants (labelled associations, label
/// suffixes); Diamonds renders the .ii variants (explicit diamond and circle
/// nodes carrying stereotypes).
enum class NotationStyle { Arrows, Diamonds };

std::string_view style_name(NotationStyle style) noexcept;
std::optional<NotationStyle> style_from_name(std::string_view name);

enum class NodeKind {
    ClassBox,
    AnonymousClassBox,
    SetOperatorCircle,
    PropertyDiamond,
    IndividualBox,
    AttributeBox,  // datatype property drawn as a box attached to its class
    DatatypeBox,   // datatype used as a range in the diamond style
};

enum class SetOperator { None, Intersection, Union, Equivalent, Disjoint };

std::string_view node_kind_name(NodeKind kind) noexcept;

struct DiagramNode {
    std::string id;
    NodeKind kind = NodeKind::ClassBox;
    SetOperator op = SetOperator::None;
    std::string label;
    std::vector<std::string> stereotypes;
    std::string tooltip;  // restriction text for anonymous classes
    bool underlined = false;
    bool dashed = false;

    auto operator<=>(const DiagramNode&) const = default;
};

enum class EdgeKind { Generalization, Dependency, SolidAssociation, DottedAssociation };

std::string_view edge_kind_name(EdgeKind kind) noexcept;

/// Endpoints name a node id or, for edges between properties in the arrow
/// style, the id of another (association) edge.
struct DiagramEdge {
    std::string from;
    std::string to;
    EdgeKind kind = EdgeKind::Dependency;
    std::string stereotype;
    std::string label;
    bool bidirectional = false;
    std::string id;  // set on association edges only

    auto operator<=>(const DiagramEdge&) const = default;
};

struct Diagram {
    NotationStyle style = NotationStyle::Arrows;
    std::vector<DiagramNode> nodes;  // sorted by id
    std::vector<DiagramEdge> edges;  // sorted
    /// Logical triples with no notation, sorted.
    std::vector<rdf::Triple> skipped;
    std::size_t axiom_count = 0;
    std::size_t mapped_count = 0;
};

/// Triples that carry logical meaning and must be drawn or reported as skipped.
std::vector<rdf::Triple> logical_triples(const rdf::OntologyModel& model);

Diagram build_diagram(const rdf::OntologyModel& model, NotationStyle style);

/// Graphviz dot text. Throws DanglingEdge if an edge names an unknown endpoint.
std::string emit_diagram(const std::vector<DiagramNode>& nodes, const std::vector<DiagramEdge>& edges);
inline std::string emit_diagram(const Diagram& d) { return emit_diagram(d.nodes, d.edges); }

/// "xsd:string" for the RDF, RDFS, OWL and XSD namespaces, the local name otherwise.
std::string compact_name(std::string_view iri);

}  // namespace fairvoc::diagram
