#include "fairvoc/diagram/diagram.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "fairvoc/error.hpp"
#include "fairvoc/rdf/iri.hpp"
#include "fairvoc/rdf/vocab.hpp"

namespace fairvoc::diagram {

namespace {

using rdf::Term;
using rdf::Triple;

std::string owl(std::string_view local) { return std::string(vocab::kOwl) + std::string(local); }
std::string rdfs(std::string_view local) { return std::string(vocab::kRdfs) + std::string(local); }

const std::string kThing = owl("Thing");
const std::string kType(vocab::kRdfType);

bool builtin(std::string_view iri) {
    return iri.starts_with(vocab::kRdf) || iri.starts_with(vocab::kRdfs) || iri.starts_with(vocab::kOwl) ||
           iri.starts_with(vocab::kXsd);
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += sep;
        out += p;
    }
    return out;
}

std::string node_id(const Term& t) { return t.is_blank() ? "_:" + t.value : t.value; }

struct Characteristic {
    const char* type;
    const char* suffix;
};
const Characteristic kCharacteristics[] = {
    {"FunctionalProperty", "(F)"},
    {"TransitiveProperty", "(T)"},
    {"SymmetricProperty", "(S)"},
};

class Builder {
  public:
    Builder(const rdf::OntologyModel& model, NotationStyle style) : m_(model), style_(style) {}

    Diagram run() {
        collect_declarations();
        for (const auto& c : classes_) {
            class_node(Term::iri(c));
            use(Term::iri(c), kType, Term::iri(owl("Class")));
            use(Term::iri(c), kType, Term::iri(rdfs("Class")));
        }
        for (const auto& t : m_.triples()) class_axiom(t);
        for (const auto& p : object_properties_) object_property(p);
        for (const auto& p : datatype_properties_) datatype_property(p);
        for (const auto& t : m_.triples()) property_axiom(t);
        individuals();
        return finish();
    }

  private:
    const rdf::OntologyModel& m_;
    NotationStyle style_;
    std::map<std::string, DiagramNode> nodes_;
    std::set<DiagramEdge> edges_;
    std::set<Triple> used_;
    std::set<std::string> classes_, object_properties_, datatype_properties_;

    bool arrows() const { return style_ == NotationStyle::Arrows; }

    bool has(const Term& s, const std::string& p, const Term& o) const {
        auto about = m_.about(s);
        return std::binary_search(about.begin(), about.end(), Triple{s, Term::iri(p), o});
    }

    void use(const Term& s, const std::string& p, const Term& o) {
        if (has(s, p, o)) used_.insert(Triple{s, Term::iri(p), o});
    }

    std::vector<Term> objects_used(const Term& s, const std::string& p) {
        auto out = m_.objects(s, p);
        for (const auto& o : out) use(s, p, o);
        std::sort(out.begin(), out.end());
        return out;
    }

    void add_node(DiagramNode n) { nodes_.emplace(n.id, std::move(n)); }

    void collect_declarations() {
        for (const auto& t : m_.triples()) {
            if (t.predicate.value != kType || !t.subject.is_iri() || !t.object.is_iri()) continue;
            const auto& o = t.object.value;
            if (o == owl("Class") || o == rdfs("Class")) classes_.insert(t.subject.value);
            if (o == owl("ObjectProperty")) object_properties_.insert(t.subject.value);
            if (o == owl("DatatypeProperty")) datatype_properties_.insert(t.subject.value);
        }
        // an undeclared super, equivalent or inverse property takes the kind of the declared side
        for (const auto& t : m_.triples()) {
            const auto& p = t.predicate.value;
            if (p != rdfs("subPropertyOf") && p != owl("equivalentProperty") && p != owl("inverseOf")) continue;
            if (!t.object.is_iri()) continue;
            const auto& q = t.object.value;
            if (object_properties_.count(q) || datatype_properties_.count(q)) continue;
            if (object_properties_.count(t.subject.value)) object_properties_.insert(q);
            else if (datatype_properties_.count(t.subject.value)) datatype_properties_.insert(q);
        }
    }

    std::vector<Term> list_members(Term head) {
        std::vector<Term> out;
        std::set<Term> seen;
        while (head.is_blank() && seen.insert(head).second) {
            for (const auto& first : objects_used(head, std::string(vocab::kRdfFirst))) out.push_back(first);
            auto rest = objects_used(head, std::string(vocab::kRdfRest));
            if (rest.empty()) break;
            head = rest.front();
        }
        return out;
    }

    std::string describe(const Term& t) {
        if (t.is_iri()) return compact_name(t.value);
        if (t.is_literal()) return t.value;
        for (const char* op : {"intersectionOf", "unionOf"}) {
            auto lists = m_.objects(t, owl(op));
            if (!lists.empty()) {
                std::vector<std::string> parts;
                for (const auto& member : list_members(lists.front())) parts.push_back(describe(member));
                return "(" + join(parts, std::string(op) == "unionOf" ? " or " : " and ") + ")";
            }
        }
        auto complement = m_.objects(t, owl("complementOf"));
        if (!complement.empty()) return "not " + describe(complement.front());
        auto one_of = m_.objects(t, owl("oneOf"));
        if (!one_of.empty()) {
            std::vector<std::string> parts;
            for (const auto& member : list_members(one_of.front())) parts.push_back(describe(member));
            return "{" + join(parts, ", ") + "}";
        }
        auto on = m_.objects(t, owl("onProperty"));
        if (!on.empty()) {
            static const std::pair<const char*, const char*> kQualifiers[] = {
                {"someValuesFrom", "some"},    {"allValuesFrom", "only"},
                {"hasValue", "value"},         {"minCardinality", "min"},
                {"maxCardinality", "max"},     {"cardinality", "exactly"},
                {"minQualifiedCardinality", "min"}, {"maxQualifiedCardinality", "max"},
                {"qualifiedCardinality", "exactly"},
            };
            std::string text = describe(on.front());
            for (const auto& [pred, word] : kQualifiers) {
                auto v = m_.objects(t, owl(pred));
                if (!v.empty()) text += std::string(" ") + word + " " + describe(v.front());
            }
            for (const auto& q : m_.objects(t, owl("onClass"))) text += " " + describe(q);
            return text;
        }
        return "anonymous class";
    }

    void consume_subtree(const Term& t, std::set<Term>& seen) {
        if (!t.is_blank() || !seen.insert(t).second) return;
        for (const auto& tr : m_.about(t)) {
            used_.insert(tr);
            consume_subtree(tr.object, seen);
        }
    }

    std::string ensure_class_box(const std::string& iri) {
        if (!nodes_.count(iri)) add_node({iri, NodeKind::ClassBox, SetOperator::None, compact_name(iri), {}, {}, false, false});
        return iri;
    }

    std::string class_node(const Term& t) {
        if (!t.is_blank()) return ensure_class_box(t.value);
        std::string id = node_id(t);
        if (nodes_.count(id)) return id;
        for (auto [pred, op] : {std::pair{"intersectionOf", SetOperator::Intersection},
                                std::pair{"unionOf", SetOperator::Union}}) {
            auto lists = m_.objects(t, owl(pred));
            if (lists.empty()) continue;
            use(t, owl(pred), lists.front());
            use(t, kType, Term::iri(owl("Class")));
            DiagramNode circle{id, NodeKind::SetOperatorCircle, op, {}, {}, {}, false, false};
            if (arrows())
                circle.stereotypes.push_back("<<owl:" + std::string(pred) + ">>");
            else
                circle.label = op == SetOperator::Intersection ? "⊓" : "⊔";
            add_node(std::move(circle));
            for (const auto& member : list_members(lists.front()))
                edges_.insert({id, class_node(member), EdgeKind::SolidAssociation, {}, {}, false, {}});
            return id;
        }
        std::set<Term> seen;
        std::string tooltip = describe(t);
        consume_subtree(t, seen);
        add_node({id, NodeKind::AnonymousClassBox, SetOperator::None, {}, {}, tooltip, false, false});
        return id;
    }

    bool is_class_expression(const Term& t) const {
        if (t.is_iri()) return classes_.count(t.value) || !builtin(t.value) || t.value == kThing;
        return t.is_blank();
    }

    void class_axiom(const Triple& t) {
        const auto& p = t.predicate.value;
        bool sub = p == rdfs("subClassOf"), eq = p == owl("equivalentClass"), dis = p == owl("disjointWith");
        if (!(sub || eq || dis) || t.object.is_literal() || t.subject.is_literal()) return;
        if (!is_class_expression(t.subject) || !is_class_expression(t.object)) return;
        std::string a = class_node(t.subject), b = class_node(t.object);
        used_.insert(t);
        if (sub) {
            if (arrows())
                edges_.insert({a, b, EdgeKind::Generalization, {}, {}, false, {}});
            else
                edges_.insert({a, b, EdgeKind::Dependency, "<<rdfs:subClassOf>>", {}, false, {}});
            return;
        }
        std::string name = eq ? "equivalentClass" : "disjointWith";
        if (arrows()) {
            edges_.insert({a, b, EdgeKind::Dependency, "<<owl:" + name + ">>", {}, true, {}});
            return;
        }
        std::string id = name + "(" + a + "," + b + ")";
        add_node({id, NodeKind::SetOperatorCircle, eq ? SetOperator::Equivalent : SetOperator::Disjoint,
                  eq ? "≡" : "⊥", {}, {}, false, false});
        edges_.insert({id, a, EdgeKind::SolidAssociation, {}, {}, false, {}});
        edges_.insert({id, b, EdgeKind::SolidAssociation, {}, {}, false, {}});
    }

    std::vector<std::string> characteristics(const Term& p, bool datatype, bool as_stereotype) {
        std::vector<std::string> out;
        for (const auto& c : kCharacteristics) {
            if (datatype && std::string_view(c.type) != "FunctionalProperty") continue;
            if (!has(p, kType, Term::iri(owl(c.type)))) continue;
            use(p, kType, Term::iri(owl(c.type)));
            out.push_back(as_stereotype ? "<<owl:" + std::string(c.type) + ">>" : c.suffix);
        }
        return out;
    }

    std::string anchor(const std::string& p) const {
        if (!arrows()) return "prop:" + p;
        return datatype_properties_.count(p) && !object_properties_.count(p) ? "attr:" + p : "assoc:" + p;
    }

    void object_property(const std::string& iri) {
        Term p = Term::iri(iri);
        use(p, kType, Term::iri(owl("ObjectProperty")));
        auto domains = objects_used(p, rdfs("domain"));
        auto ranges = objects_used(p, rdfs("range"));
        bool known = !domains.empty() && !ranges.empty();
        auto marks = characteristics(p, false, !arrows());
        if (arrows()) {
            std::string label = compact_name(iri);
            if (!marks.empty()) label += " " + join(marks, " ");
            std::vector<std::string> from, to;
            for (const auto& d : domains) from.push_back(class_node(d));
            for (const auto& r : ranges) to.push_back(class_node(r));
            if (from.empty()) from.push_back(ensure_class_box(kThing));
            if (to.empty()) to.push_back(ensure_class_box(kThing));
            std::size_t n = 0;
            for (const auto& f : from)
                for (const auto& t : to) {
                    std::string id = "assoc:" + iri + (n ? "#" + std::to_string(n) : "");
                    ++n;
                    edges_.insert({f, t, known ? EdgeKind::SolidAssociation : EdgeKind::DottedAssociation, {}, label,
                                   false, id});
                }
            return;
        }
        DiagramNode diamond{"prop:" + iri, NodeKind::PropertyDiamond, SetOperator::None, compact_name(iri), {}, {},
                            false, false};
        if (!known) diamond.stereotypes.push_back("<<owl:ObjectProperty>>");
        for (auto& s : marks) diamond.stereotypes.push_back(s);
        add_node(std::move(diamond));
        for (const auto& d : domains)
            edges_.insert({"prop:" + iri, class_node(d), EdgeKind::DottedAssociation, "<<rdfs:domain>>", {}, false, {}});
        for (const auto& r : ranges)
            edges_.insert({"prop:" + iri, class_node(r), EdgeKind::DottedAssociation, "<<rdfs:range>>", {}, false, {}});
    }

    std::string datatype_node(const Term& t) {
        std::string id = "datatype:" + node_id(t);
        if (nodes_.count(id)) return id;
        std::string label = t.is_iri() ? compact_name(t.value) : "anonymous datatype";
        std::set<Term> seen;
        consume_subtree(t, seen);
        add_node({id, NodeKind::DatatypeBox, SetOperator::None, label, {}, {}, false, false});
        return id;
    }

    void datatype_property(const std::string& iri) {
        Term p = Term::iri(iri);
        if (object_properties_.count(iri)) return;
        use(p, kType, Term::iri(owl("DatatypeProperty")));
        auto domains = objects_used(p, rdfs("domain"));
        auto ranges = objects_used(p, rdfs("range"));
        auto marks = characteristics(p, true, !arrows());
        if (arrows()) {
            std::string label = compact_name(iri);
            if (!ranges.empty()) {
                std::vector<std::string> names;
                for (const auto& r : ranges) {
                    std::set<Term> seen;
                    consume_subtree(r, seen);
                    names.push_back(r.is_iri() ? compact_name(r.value) : "anonymous datatype");
                }
                label += " :: " + join(names, ", ");
            }
            if (!marks.empty()) label += " " + join(marks, " ");
            bool attached = !domains.empty();
            add_node({"attr:" + iri, NodeKind::AttributeBox, SetOperator::None, label, {}, {}, false, !attached});
            std::vector<std::string> owners;
            for (const auto& d : domains) owners.push_back(class_node(d));
            if (owners.empty()) owners.push_back(ensure_class_box(kThing));
            for (const auto& o : owners)
                edges_.insert({o, "attr:" + iri, attached ? EdgeKind::SolidAssociation : EdgeKind::DottedAssociation,
                               {}, {}, false, {}});
            return;
        }
        DiagramNode diamond{"prop:" + iri, NodeKind::PropertyDiamond, SetOperator::None, compact_name(iri), {}, {},
                            false, false};
        if (domains.empty() || ranges.empty()) diamond.stereotypes.push_back("<<owl:DatatypeProperty>>");
        for (auto& s : marks) diamond.stereotypes.push_back(s);
        add_node(std::move(diamond));
        for (const auto& d : domains)
            edges_.insert({"prop:" + iri, class_node(d), EdgeKind::DottedAssociation, "<<rdfs:domain>>", {}, false, {}});
        for (const auto& r : ranges)
            edges_.insert({"prop:" + iri, datatype_node(r), EdgeKind::DottedAssociation, "<<rdfs:range>>", {}, false, {}});
    }

    void property_axiom(const Triple& t) {
        const auto& p = t.predicate.value;
        std::string stereotype;
        bool both = false;
        if (p == rdfs("subPropertyOf")) stereotype = "<<owl:subPropertyOf>>";
        else if (p == owl("equivalentProperty")) stereotype = "<<owl:equivalentProperty>>", both = true;
        else if (p == owl("inverseOf")) stereotype = "<<owl:inverseOf>>", both = true;
        else return;
        if (!t.subject.is_iri() || !t.object.is_iri()) return;
        auto known = [&](const std::string& iri) {
            return object_properties_.count(iri) || datatype_properties_.count(iri);
        };
        if (!known(t.subject.value) || !known(t.object.value)) return;
        used_.insert(t);
        edges_.insert({anchor(t.subject.value), anchor(t.object.value), EdgeKind::Dependency, stereotype, {}, both, {}});
    }

    void individuals() {
        std::map<std::string, std::vector<Term>> members;
        for (const auto& t : m_.triples()) {
            if (t.predicate.value != kType || !t.subject.is_iri()) continue;
            if (t.object.is_iri() && t.object.value == owl("NamedIndividual")) {
                members[t.subject.value];
                used_.insert(t);
            } else if (t.object.is_blank() || (t.object.is_iri() && !builtin(t.object.value))) {
                members[t.subject.value].push_back(t.object);
                used_.insert(t);
            }
        }
        for (auto& [iri, types] : members) {
            std::sort(types.begin(), types.end());
            std::string label = compact_name(iri);
            if (arrows()) {
                std::vector<std::string> names;
                for (const auto& c : types) names.push_back(c.is_iri() ? compact_name(c.value) : describe(c));
                for (const auto& c : types)
                    if (c.is_blank()) {
                        std::set<Term> seen;
                        consume_subtree(c, seen);
                    }
                if (!names.empty()) label += " : " + join(names, ", ");
            } else {
                for (const auto& c : types)
                    edges_.insert({iri, class_node(c), EdgeKind::Dependency, "<<rdf:type>>", {}, false, {}});
            }
            add_node({iri, NodeKind::IndividualBox, SetOperator::None, label, {}, {}, true, false});
        }
    }

    Diagram finish() {
        Diagram d;
        d.style = style_;
        for (auto& [id, n] : nodes_) d.nodes.push_back(std::move(n));
        d.edges.assign(edges_.begin(), edges_.end());
        auto axioms = logical_triples(m_);
        d.axiom_count = axioms.size();
        for (const auto& t : axioms) {
            if (used_.count(t))
                ++d.mapped_count;
            else
                d.skipped.push_back(t);
        }
        return d;
    }
};

std::string dot_quote(std::string_view text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"' || c == '\\') out += '\\';
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out += c;
    }
    return out + "\"";
}

std::string html_escape(std::string_view text) {
    std::string out;
    for (char c : text) {
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

std::string node_attributes(const DiagramNode& n) {
    std::string label = n.label;
    std::vector<std::string> attrs;
    switch (n.kind) {
        case NodeKind::ClassBox: attrs.push_back("shape=box"); break;
        case NodeKind::AnonymousClassBox:
            attrs.push_back("shape=box");
            if (!n.tooltip.empty()) attrs.push_back("tooltip=" + dot_quote(n.tooltip));
            break;
        case NodeKind::SetOperatorCircle:
            attrs.push_back("shape=circle");
            if (!n.stereotypes.empty()) attrs.push_back("xlabel=" + dot_quote(join(n.stereotypes, "\n")));
            break;
        case NodeKind::PropertyDiamond:
            attrs.push_back("shape=diamond");
            if (!n.stereotypes.empty()) label = join(n.stereotypes, "\n") + "\n" + label;
            break;
        case NodeKind::IndividualBox: attrs.push_back("shape=box"); break;
        case NodeKind::AttributeBox:
            attrs.push_back("shape=box");
            if (n.dashed) attrs.push_back("style=dashed");
            break;
        case NodeKind::DatatypeBox: attrs.push_back("shape=box, style=rounded"); break;
    }
    if (n.underlined)
        attrs.insert(attrs.begin() + 1, "label=<<u>" + html_escape(label) + "</u>>");
    else
        attrs.insert(attrs.begin() + 1, "label=" + dot_quote(label));
    return join(attrs, ", ");
}

std::string edge_attributes(const DiagramEdge& e, bool head) {
    std::vector<std::string> attrs;
    std::vector<std::string> text;
    if (!e.stereotype.empty()) text.push_back(e.stereotype);
    if (!e.label.empty()) text.push_back(e.label);
    switch (e.kind) {
        case EdgeKind::Generalization: attrs.push_back("arrowhead=empty"); break;
        case EdgeKind::Dependency:
            attrs.push_back("style=dashed");
            attrs.push_back("arrowhead=vee");
            if (e.bidirectional) attrs.push_back("dir=both, arrowtail=vee");
            break;
        case EdgeKind::SolidAssociation:
        case EdgeKind::DottedAssociation:
            if (e.kind == EdgeKind::DottedAssociation) attrs.push_back("style=dotted");
            attrs.push_back(text.empty() ? "arrowhead=none" : "arrowhead=vee");
            break;
    }
    if (!head) {
        for (auto& a : attrs)
            if (a.starts_with("arrowhead=")) a = "arrowhead=none";
        attrs.erase(std::remove_if(attrs.begin(), attrs.end(),
                                   [](const std::string& a) { return a.starts_with("dir="); }),
                    attrs.end());
    }
    if (!text.empty()) attrs.push_back("label=" + dot_quote(join(text, "\n")));
    return join(attrs, ", ");
}

}  // namespace

std::string_view style_name(NotationStyle style) noexcept {
    return style == NotationStyle::Arrows ? "arrows" : "diamonds";
}

std::optional<NotationStyle> style_from_name(std::string_view name) {
    if (name == "arrows") return NotationStyle::Arrows;
    if (name == "diamonds") return NotationStyle::Diamonds;
    return std::nullopt;
}

std::string_view node_kind_name(NodeKind kind) noexcept {
    switch (kind) {
        case NodeKind::ClassBox: return "ClassBox";
        case NodeKind::AnonymousClassBox: return "AnonymousClassBox";
        case NodeKind::SetOperatorCircle: return "SetOperatorCircle";
        case NodeKind::PropertyDiamond: return "PropertyDiamond";
        case NodeKind::IndividualBox: return "IndividualBox";
        case NodeKind::AttributeBox: return "AttributeBox";
        case NodeKind::DatatypeBox: return "DatatypeBox";
    }
    return "?";
}

std::string_view edge_kind_name(EdgeKind kind) noexcept {
    switch (kind) {
        case EdgeKind::Generalization: return "Generalization";
        case EdgeKind::Dependency: return "Dependency";
        case EdgeKind::SolidAssociation: return "SolidAssociation";
        case EdgeKind::DottedAssociation: return "DottedAssociation";
    }
    return "?";
}

std::string compact_name(std::string_view iri) {
    static const std::pair<std::string_view, std::string_view> kPrefixes[] = {
        {vocab::kRdf, "rdf:"}, {vocab::kRdfs, "rdfs:"}, {vocab::kOwl, "owl:"}, {vocab::kXsd, "xsd:"}};
    for (const auto& [ns, prefix] : kPrefixes)
        if (iri.starts_with(ns)) return std::string(prefix) + std::string(iri.substr(ns.size()));
    auto local = iri::local_name(iri);
    return local.empty() ? std::string(iri) : local;
}

std::vector<rdf::Triple> logical_triples(const rdf::OntologyModel& model) {
    std::set<std::string> properties;
    for (const auto& t : model.triples())
        if (t.predicate.value == vocab::kRdfType && t.object.is_iri() &&
            (t.object.value == owl("ObjectProperty") || t.object.value == owl("DatatypeProperty")))
            properties.insert(t.subject.value);

    std::vector<rdf::Triple> out;
    for (const auto& t : model.triples()) {
        if (t.subject.is_iri() && t.subject.value == model.ontology_iri()) continue;
        const auto& p = t.predicate.value;
        if (p == vocab::kRdfType) {
            if (t.object.is_iri() &&
                (t.object.value == vocab::kOwlOntology || t.object.value == owl("AnnotationProperty")))
                continue;
            out.push_back(t);
        } else if (!rdf::is_annotation_predicate(p) || properties.count(p)) {
            out.push_back(t);
        }
    }
    return out;
}

Diagram build_diagram(const rdf::OntologyModel& model, NotationStyle style) {
    return Builder(model, style).run();
}

std::string emit_diagram(const std::vector<DiagramNode>& nodes_in, const std::vector<DiagramEdge>& edges_in) {
    auto nodes = nodes_in;
    auto edges = edges_in;
    std::sort(nodes.begin(), nodes.end());
    std::sort(edges.begin(), edges.end());

    std::set<std::string> endpoints;
    for (const auto& n : nodes) endpoints.insert(n.id);
    std::set<std::string> edge_ids;
    for (const auto& e : edges)
        if (!e.id.empty()) edge_ids.insert(e.id);
    for (const auto& e : edges)
        for (const auto* end : {&e.from, &e.to})
            if (!endpoints.count(*end) && !edge_ids.count(*end)) throw DanglingEdge(*end);

    // association edges that other edges point at are split at a junction point
    std::set<std::string> junctions;
    for (const auto& e : edges)
        for (const auto* end : {&e.from, &e.to})
            if (edge_ids.count(*end)) junctions.insert(*end);

    std::ostringstream out;
    out << "digraph ontology {\n";
    out << "  graph [rankdir=BT, fontname=\"Helvetica\"];\n";
    out << "  node [fontname=\"Helvetica\", fontsize=10];\n";
    out << "  edge [fontname=\"Helvetica\", fontsize=9];\n";
    for (const auto& n : nodes) out << "  " << dot_quote(n.id) << " [" << node_attributes(n) << "];\n";
    for (const auto& j : junctions) out << "  " << dot_quote(j) << " [shape=point, width=0.05, label=\"\"];\n";
    for (const auto& e : edges) {
        if (!e.id.empty() && junctions.count(e.id)) {
            out << "  " << dot_quote(e.from) << " -> " << dot_quote(e.id) << " [" << edge_attributes(e, false) << "];\n";
            DiagramEdge tail = e;
            tail.label.clear();
            tail.stereotype.clear();
            auto attrs = edge_attributes(tail, true);
            if (attrs.find("arrowhead=none") != std::string::npos && !e.label.empty())
                attrs.replace(attrs.find("arrowhead=none"), 14, "arrowhead=vee");
            out << "  " << dot_quote(e.id) << " -> " << dot_quote(e.to) << " [" << attrs << "];\n";
        } else {
            out << "  " << dot_quote(e.from) << " -> " << dot_quote(e.to) << " [" << edge_attributes(e, true) << "];\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace fairvoc::diagram
