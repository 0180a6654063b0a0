#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fairvoc/rdf/term.hpp"

namespace fairvoc::rdf {

enum class TermKind { Class, ObjectProperty, DatatypeProperty, AnnotationProperty, NamedIndividual };

std::string_view term_kind_name(TermKind kind) noexcept;

/// A named term declared in the ontology document.
struct TermDecl {
    std::string iri;
    std::vector<TermKind> kinds;  // sorted, unique
    /// Annotation property IRI -> values, in model order.
    std::multimap<std::string, Term> annotations;

    bool has_kind(TermKind kind) const;
    bool has_annotation(std::string_view property) const;
};

/// Immutable, deduplicated view of one ontology document.
class OntologyModel {
  public:
    /// Builds the model and designates the ontology IRI.
    /// Throws NoOntologyDeclaration or MultipleOntologyDeclarations.
    static OntologyModel from_triples(std::vector<Triple> triples);

    const std::string& ontology_iri() const noexcept { return ontology_iri_; }
    std::span<const Triple> triples() const noexcept { return triples_; }
    const std::vector<TermDecl>& declared_terms() const noexcept { return terms_; }
    /// owl:imports targets, recorded but never fetched.
    const std::vector<std::string>& imports() const noexcept { return imports_; }

    /// Triples whose subject equals `subject`, in sorted order.
    std::span<const Triple> about(const Term& subject) const;
    /// Objects for (subject, predicate) in triple order.
    std::vector<Term> objects(const Term& subject, std::string_view predicate) const;
    bool has_type(const Term& subject, std::string_view type_iri) const;
    const TermDecl* find_term(std::string_view iri) const;

  private:
    OntologyModel() = default;

    std::string ontology_iri_;
    std::vector<Triple> triples_;
    std::vector<TermDecl> terms_;
    std::vector<std::string> imports_;
};

/// All objects of (subject, predicate), sorted lexically by value.
std::vector<Term> get_annotations(const OntologyModel& model, std::string_view subject,
                                  std::string_view predicate);

/// True for predicates carrying documentation rather than logical axioms.
bool is_annotation_predicate(std::string_view predicate);

}  // namespace fairvoc::rdf
