#include <cctype>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fairvoc/error.hpp"
#include "fairvoc/rdf/iri.hpp"
#include "fairvoc/rdf/parse.hpp"
#include "fairvoc/rdf/vocab.hpp"
#include "xml.hpp"

namespace fairvoc::rdf {

namespace {

const std::string kRdfNs(vocab::kRdf);
const std::string kXmlLiteral = kRdfNs + "XMLLiteral";

bool is_syntax_attr(const xml::Attribute& a) {
    if (a.ns == xml::kXmlNs) return true;
    if (a.ns.empty()) return true;  // unqualified attributes carry no RDF meaning
    if (a.ns != kRdfNs) return false;
    static const std::set<std::string> kNames{"about", "ID",        "nodeID",  "resource",
                                              "datatype", "parseType", "aboutEach", "aboutEachPrefix",
                                              "bagID"};
    return kNames.count(a.local) > 0;
}

struct Context {
    std::string base;
    std::string lang;
};

class RdfXmlReader {
  public:
    explicit RdfXmlReader(std::string base) : base_(std::move(base)) {}

    std::vector<Triple> run(const xml::Element& root) {
        Context ctx = inherit({base_, {}}, root);
        if (root.ns == kRdfNs && root.local == "RDF") {
            for (const auto& child : root.children) node_element(*child, ctx);
        } else {
            node_element(root, ctx);
        }
        return std::move(out_);
    }

  private:
    std::string base_;
    std::vector<Triple> out_;
    std::size_t fresh_ = 0;

    [[noreturn]] static void fail(const xml::Element& e, const std::string& what) {
        throw SyntaxError(what, e.line, e.column);
    }

    Term fresh_blank() { return Term::blank("_g" + std::to_string(fresh_++)); }

    static Context inherit(const Context& parent, const xml::Element& e) {
        Context ctx = parent;
        if (auto* b = e.find(xml::kXmlNs, "base")) ctx.base = iri::resolve(parent.base, b->value);
        if (auto* l = e.find(xml::kXmlNs, "lang")) ctx.lang = l->value;
        return ctx;
    }

    Term subject_of(const xml::Element& e, const Context& ctx) {
        if (auto* a = e.find(kRdfNs, "about")) return Term::iri(iri::resolve(ctx.base, a->value));
        if (auto* a = e.find(kRdfNs, "ID"))
            return Term::iri(iri::resolve(ctx.base, "#" + a->value));
        if (auto* a = e.find(kRdfNs, "nodeID")) return Term::blank(a->value);
        return fresh_blank();
    }

    void emit(Term s, const std::string& p, Term o) {
        out_.push_back({std::move(s), Term::iri(p), std::move(o)});
    }

    Term node_element(const xml::Element& e, const Context& parent) {
        Context ctx = inherit(parent, e);
        Term subject = subject_of(e, ctx);
        if (!(e.ns == kRdfNs && e.local == "Description"))
            emit(subject, std::string(vocab::kRdfType), Term::iri(e.iri()));
        property_attributes(e, subject, ctx);
        int li = 0;
        for (const auto& child : e.children) property_element(*child, subject, ctx, li);
        return subject;
    }

    void property_attributes(const xml::Element& e, const Term& subject, const Context& ctx) {
        for (const auto& a : e.attributes) {
            if (is_syntax_attr(a)) continue;
            std::string p = a.ns + a.local;
            if (p == vocab::kRdfType)
                emit(subject, p, Term::iri(iri::resolve(ctx.base, a.value)));
            else
                emit(subject, p, Term::literal(a.value, {}, ctx.lang));
        }
    }

    void property_element(const xml::Element& e, const Term& subject, const Context& parent,
                          int& li) {
        Context ctx = inherit(parent, e);
        std::string predicate = e.iri();
        if (e.ns == kRdfNs && e.local == "li") predicate = kRdfNs + "_" + std::to_string(++li);

        const auto* parse_type = e.find(kRdfNs, "parseType");
        if (parse_type && parse_type->value == "Resource") {
            Term node = fresh_blank();
            emit(subject, predicate, node);
            int inner = 0;
            for (const auto& child : e.children) property_element(*child, node, ctx, inner);
            return;
        }
        if (parse_type && parse_type->value == "Collection") {
            std::vector<Term> items;
            for (const auto& child : e.children) items.push_back(node_element(*child, ctx));
            emit(subject, predicate, list(items));
            return;
        }
        if (parse_type) {  // "Literal" and unknown values are treated as XML literals
            emit(subject, predicate, Term::literal(e.raw, kXmlLiteral));
            return;
        }
        if (!e.children.empty()) {
            if (e.children.size() != 1) fail(e, "property element with more than one node element");
            emit(subject, predicate, node_element(*e.children.front(), ctx));
            return;
        }

        bool has_property_attrs = false;
        for (const auto& a : e.attributes)
            if (!is_syntax_attr(a)) has_property_attrs = true;
        const auto* resource = e.find(kRdfNs, "resource");
        const auto* node_id = e.find(kRdfNs, "nodeID");
        if (resource || node_id || has_property_attrs) {
            Term object = resource   ? Term::iri(iri::resolve(ctx.base, resource->value))
                          : node_id ? Term::blank(node_id->value)
                                    : fresh_blank();
            emit(subject, predicate, object);
            property_attributes(e, object, ctx);
            return;
        }
        if (const auto* dt = e.find(kRdfNs, "datatype"))
            emit(subject, predicate, Term::literal(e.text, iri::resolve(ctx.base, dt->value)));
        else
            emit(subject, predicate, Term::literal(e.text, {}, ctx.lang));
    }

    Term list(const std::vector<Term>& items) {
        if (items.empty()) return Term::iri(std::string(vocab::kRdfNil));
        Term head = fresh_blank();
        Term cur = head;
        for (std::size_t i = 0; i < items.size(); ++i) {
            emit(cur, std::string(vocab::kRdfFirst), items[i]);
            Term next = i + 1 < items.size() ? fresh_blank() : Term::iri(std::string(vocab::kRdfNil));
            emit(cur, std::string(vocab::kRdfRest), next);
            cur = next;
        }
        return head;
    }
};

std::string escape_xml(std::string_view text, bool attribute) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"':
                out += attribute ? "&quot;" : "\"";
                break;
            case '\n':
                out += attribute ? "&#10;" : "\n";
                break;
            case '\r': out += "&#13;"; break;
            case '\t':
                out += attribute ? "&#9;" : "\t";
                break;
            default: out += c;
        }
    }
    return out;
}

bool ncname_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool ncname_char(unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '-' || c == '.' || c >= 0x80;
}

// Splits a predicate IRI into namespace + XML local name.
std::pair<std::string, std::string> split_predicate(const std::string& p) {
    std::size_t cut = p.size();
    while (cut > 0 && ncname_char(static_cast<unsigned char>(p[cut - 1]))) --cut;
    while (cut < p.size() && !ncname_start(static_cast<unsigned char>(p[cut]))) ++cut;
    if (cut == 0 || cut >= p.size()) throw UnsupportedFormat("predicate <" + p + "> has no XML local name");
    return {p.substr(0, cut), p.substr(cut)};
}

}  // namespace

std::vector<Triple> parse_rdfxml(std::string_view text, std::string_view base_iri) {
    auto root = xml::parse(text);
    return RdfXmlReader(std::string(base_iri)).run(*root);
}

std::string serialize_rdfxml(std::span<const Triple> triples) {
    std::map<std::string, std::string> ns_prefix{{std::string(vocab::kRdf), "rdf"}};
    auto prefix_for = [&](const std::string& ns) -> const std::string& {
        auto it = ns_prefix.find(ns);
        if (it == ns_prefix.end())
            it = ns_prefix.emplace(ns, "ns" + std::to_string(ns_prefix.size())).first;
        return it->second;
    };
    for (const auto& t : triples) prefix_for(split_predicate(t.predicate.value).first);

    std::map<Term, std::vector<const Triple*>> by_subject;
    for (const auto& t : triples) by_subject[t.subject].push_back(&t);

    std::string out = "<?xml version=\"1.0\" encoding=\"utf-8\"?>\n<rdf:RDF";
    for (const auto& [ns, prefix] : ns_prefix)
        out += "\n    xmlns:" + prefix + "=\"" + escape_xml(ns, true) + "\"";
    out += ">\n";
    for (const auto& [subject, list] : by_subject) {
        out += "  <rdf:Description ";
        out += subject.is_iri() ? "rdf:about=\"" + escape_xml(subject.value, true) + "\""
                                : "rdf:nodeID=\"" + escape_xml(subject.value, true) + "\"";
        out += ">\n";
        for (const Triple* t : list) {
            auto [ns, local] = split_predicate(t->predicate.value);
            std::string tag = prefix_for(ns) + ":" + local;
            const Term& o = t->object;
            out += "    <" + tag;
            if (o.is_iri()) {
                out += " rdf:resource=\"" + escape_xml(o.value, true) + "\"/>\n";
            } else if (o.is_blank()) {
                out += " rdf:nodeID=\"" + escape_xml(o.value, true) + "\"/>\n";
            } else {
                if (!o.language.empty()) out += " xml:lang=\"" + escape_xml(o.language, true) + "\"";
                if (!o.datatype.empty())
                    out += " rdf:datatype=\"" + escape_xml(o.datatype, true) + "\"";
                out += ">" + escape_xml(o.value, false) + "</" + tag + ">\n";
            }
        }
        out += "  </rdf:Description>\n";
    }
    out += "</rdf:RDF>\n";
    return out;
}

}  // namespace fairvoc::rdf
