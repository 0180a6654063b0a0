#include "fairvoc/rdf/model.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "fairvoc/error.hpp"
#include "fairvoc/rdf/vocab.hpp"

namespace fairvoc::rdf {

namespace {

constexpr std::array<std::pair<std::string_view, TermKind>, 6> kKindTypes{{
    {"http://www.w3.org/2002/07/owl#Class", TermKind::Class},
    {"http://www.w3.org/2000/01/rdf-schema#Class", TermKind::Class},
    {"http://www.w3.org/2002/07/owl#ObjectProperty", TermKind::ObjectProperty},
    {"http://www.w3.org/2002/07/owl#DatatypeProperty", TermKind::DatatypeProperty},
    {"http://www.w3.org/2002/07/owl#AnnotationProperty", TermKind::AnnotationProperty},
    {"http://www.w3.org/2002/07/owl#NamedIndividual", TermKind::NamedIndividual},
}};

// owl: predicates that document rather than constrain.
constexpr std::array<std::string_view, 7> kOwlAnnotations{
    "versionInfo", "versionIRI", "priorVersion", "backwardCompatibleWith",
    "incompatibleWith", "deprecated", "backwardCompatibility"};

bool same_sp(const Triple& t, const Term& s) { return t.subject == s; }

}  // namespace

std::string_view term_kind_name(TermKind kind) noexcept {
    switch (kind) {
        case TermKind::Class: return "Class";
        case TermKind::ObjectProperty: return "ObjectProperty";
        case TermKind::DatatypeProperty: return "DatatypeProperty";
        case TermKind::AnnotationProperty: return "AnnotationProperty";
        case TermKind::NamedIndividual: return "NamedIndividual";
    }
    return "?";
}

bool TermDecl::has_kind(TermKind kind) const {
    return std::find(kinds.begin(), kinds.end(), kind) != kinds.end();
}

bool TermDecl::has_annotation(std::string_view property) const {
    return annotations.find(std::string(property)) != annotations.end();
}

bool is_annotation_predicate(std::string_view p) {
    if (p.starts_with(vocab::kRdf)) return false;
    if (p.starts_with(vocab::kRdfs)) {
        auto local = p.substr(vocab::kRdfs.size());
        return local == "label" || local == "comment" || local == "seeAlso" ||
               local == "isDefinedBy";
    }
    if (p.starts_with(vocab::kOwl)) {
        auto local = p.substr(vocab::kOwl.size());
        return std::find(kOwlAnnotations.begin(), kOwlAnnotations.end(), local) !=
               kOwlAnnotations.end();
    }
    return true;
}

OntologyModel OntologyModel::from_triples(std::vector<Triple> triples) {
    std::sort(triples.begin(), triples.end());
    triples.erase(std::unique(triples.begin(), triples.end()), triples.end());

    OntologyModel model;
    model.triples_ = std::move(triples);

    std::vector<Term> headers;
    for (const auto& t : model.triples_) {
        if (t.predicate.value == vocab::kRdfType && t.object.is_iri() &&
            t.object.value == vocab::kOwlOntology)
            headers.push_back(t.subject);
    }
    if (headers.empty()) throw NoOntologyDeclaration();
    if (headers.size() > 1) throw MultipleOntologyDeclarations(headers.size());
    if (!headers.front().is_iri())
        throw NoOntologyDeclaration("the owl:Ontology header is a blank node, not an IRI");
    model.ontology_iri_ = headers.front().value;

    std::map<std::string, TermDecl> decls;
    for (const auto& t : model.triples_) {
        if (!t.subject.is_iri() || t.subject.value == model.ontology_iri_) continue;
        if (t.predicate.value != vocab::kRdfType || !t.object.is_iri()) continue;
        for (const auto& [type, kind] : kKindTypes) {
            if (t.object.value != type) continue;
            auto& d = decls[t.subject.value];
            d.iri = t.subject.value;
            if (!d.has_kind(kind)) d.kinds.push_back(kind);
        }
    }
    for (auto& [iri, decl] : decls) {
        std::sort(decl.kinds.begin(), decl.kinds.end());
        for (const auto& t : model.about(Term::iri(iri)))
            if (is_annotation_predicate(t.predicate.value))
                decl.annotations.emplace(t.predicate.value, t.object);
        model.terms_.push_back(std::move(decl));
    }

    for (const auto& o : model.objects(Term::iri(model.ontology_iri_), vocab::kOwlImports))
        model.imports_.push_back(o.value);
    return model;
}

std::span<const Triple> OntologyModel::about(const Term& subject) const {
    auto lo = std::partition_point(triples_.begin(), triples_.end(),
                                   [&](const Triple& t) { return t.subject < subject; });
    auto hi = lo;
    while (hi != triples_.end() && same_sp(*hi, subject)) ++hi;
    return {lo, hi};
}

std::vector<Term> OntologyModel::objects(const Term& subject, std::string_view predicate) const {
    std::vector<Term> out;
    for (const auto& t : about(subject))
        if (t.predicate.value == predicate) out.push_back(t.object);
    return out;
}

bool OntologyModel::has_type(const Term& subject, std::string_view type_iri) const {
    for (const auto& t : about(subject))
        if (t.predicate.value == vocab::kRdfType && t.object.value == type_iri) return true;
    return false;
}

const TermDecl* OntologyModel::find_term(std::string_view iri) const {
    auto it = std::find_if(terms_.begin(), terms_.end(),
                           [&](const TermDecl& d) { return d.iri == iri; });
    return it == terms_.end() ? nullptr : &*it;
}

std::vector<Term> get_annotations(const OntologyModel& model, std::string_view subject,
                                  std::string_view predicate) {
    auto values = model.objects(Term::iri(std::string(subject)), predicate);
    std::stable_sort(values.begin(), values.end(), [](const Term& a, const Term& b) {
        return std::tie(a.value, a.language, a.datatype, a.kind) <
               std::tie(b.value, b.language, b.datatype, b.kind);
    });
    return values;
}

}  // namespace fairvoc::rdf
