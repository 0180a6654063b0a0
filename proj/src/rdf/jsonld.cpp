// JSON-LD reader for the compacted and expanded shapes ontology tooling
// usually emits. Remote contexts are not fetched; a schema.org context
// reference maps to @vocab http://schema.org/.
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fairvoc/error.hpp"
#include "fairvoc/rdf/iri.hpp"
#include "fairvoc/rdf/parse.hpp"
#include "fairvoc/rdf/vocab.hpp"

namespace fairvoc::rdf {

namespace {

using nlohmann::json;

struct TermDef {
    std::string id;
    std::string type;  // "@id", "@vocab", datatype IRI or empty
    std::optional<std::string> language;
    bool list = false;
};

struct Context {
    std::string base;
    std::string vocab;
    std::string language;
    std::map<std::string, TermDef> terms;
};

bool is_keyword(const std::string& s) { return !s.empty() && s[0] == '@'; }

class JsonLdReader {
  public:
    explicit JsonLdReader(std::string base) { root_.base = std::move(base); }

    std::vector<Triple> run(const json& doc) {
        if (doc.is_array()) {
            for (const auto& item : doc) top(item, root_);
        } else if (doc.is_object()) {
            top(doc, root_);
        } else {
            throw SyntaxError("JSON-LD document must be an object or array", 0, 0);
        }
        return std::move(out_);
    }

  private:
    Context root_;
    std::vector<Triple> out_;
    std::size_t fresh_ = 0;

    Term fresh_blank() { return Term::blank("_g" + std::to_string(fresh_++)); }

    void top(const json& obj, const Context& parent) {
        if (!obj.is_object()) throw SyntaxError("expected a JSON-LD node object", 0, 0);
        Context ctx = parent;
        if (obj.contains("@context")) apply_context(ctx, obj.at("@context"));
        if (obj.contains("@graph")) {
            for (const auto& item : obj.at("@graph")) top(item, ctx);
            bool only_graph = true;
            for (const auto& [k, v] : obj.items())
                if (k != "@context" && k != "@graph" && k != "@id") only_graph = false;
            if (only_graph) return;
        }
        node(obj, ctx);
    }

    void apply_context(Context& ctx, const json& value) {
        if (value.is_array()) {
            for (const auto& v : value) apply_context(ctx, v);
            return;
        }
        if (value.is_null()) {
            ctx = Context{root_.base, {}, {}, {}};
            return;
        }
        if (value.is_string()) {
            std::string ref = value.get<std::string>();
            if (iri::host(ref) == "schema.org") ctx.vocab = std::string(vocab::kSchema);
            return;
        }
        if (!value.is_object()) throw SyntaxError("invalid @context", 0, 0);
        if (value.contains("@base") && value["@base"].is_string())
            ctx.base = iri::resolve(ctx.base, value["@base"].get<std::string>());
        if (value.contains("@vocab") && value["@vocab"].is_string())
            ctx.vocab = expand(ctx, value["@vocab"].get<std::string>(), true);
        if (value.contains("@language") && value["@language"].is_string())
            ctx.language = value["@language"].get<std::string>();
        // Two passes so that terms may reference prefixes defined later.
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& [key, def] : value.items()) {
                if (is_keyword(key)) continue;
                TermDef td;
                if (def.is_string()) {
                    td.id = expand(ctx, def.get<std::string>(), true);
                } else if (def.is_object()) {
                    td.id = def.contains("@id") && def["@id"].is_string()
                                ? expand(ctx, def["@id"].get<std::string>(), true)
                                : expand(ctx, key, true);
                    if (def.contains("@type") && def["@type"].is_string()) {
                        std::string t = def["@type"].get<std::string>();
                        td.type = is_keyword(t) ? t : expand(ctx, t, true);
                    }
                    if (def.contains("@language")) {
                        const auto& l = def["@language"];
                        td.language = l.is_string() ? l.get<std::string>() : std::string();
                    }
                    if (def.contains("@container") && def["@container"] == "@list") td.list = true;
                } else if (def.is_null()) {
                    continue;
                } else {
                    throw SyntaxError("invalid term definition for '" + key + "'", 0, 0);
                }
                ctx.terms[key] = td;
            }
        }
    }

    std::string expand(const Context& ctx, const std::string& value, bool vocab_relative) const {
        if (value.starts_with("_:")) return value;
        if (auto it = ctx.terms.find(value); it != ctx.terms.end() && vocab_relative)
            return it->second.id;
        if (auto colon = value.find(':'); colon != std::string::npos) {
            std::string prefix = value.substr(0, colon);
            std::string suffix = value.substr(colon + 1);
            if (!suffix.starts_with("//"))
                if (auto it = ctx.terms.find(prefix); it != ctx.terms.end())
                    return it->second.id + suffix;
            if (iri::is_absolute(value)) return value;
        }
        if (vocab_relative && !ctx.vocab.empty()) return ctx.vocab + value;
        return iri::resolve(ctx.base, value);
    }

    Term node_term(const Context& ctx, const std::string& id) {
        if (id.starts_with("_:")) return Term::blank(id.substr(2));
        return Term::iri(expand(ctx, id, false));
    }

    Term node(const json& obj, const Context& parent) {
        Context ctx = parent;
        if (obj.contains("@context")) apply_context(ctx, obj.at("@context"));
        Term subject = obj.contains("@id") && obj["@id"].is_string()
                           ? node_term(ctx, obj["@id"].get<std::string>())
                           : fresh_blank();
        for (const auto& [key, value] : obj.items()) {
            if (key == "@type") {
                auto add = [&](const json& t) {
                    if (!t.is_string()) throw SyntaxError("@type must be a string", 0, 0);
                    std::string ty = t.get<std::string>();
                    out_.push_back({subject, Term::iri(std::string(vocab::kRdfType)),
                                    ty.starts_with("_:") ? Term::blank(ty.substr(2))
                                                         : Term::iri(expand(ctx, ty, true))});
                };
                if (value.is_array())
                    for (const auto& t : value) add(t);
                else
                    add(value);
                continue;
            }
            if (is_keyword(key)) continue;
            const TermDef* def = nullptr;
            if (auto it = ctx.terms.find(key); it != ctx.terms.end()) def = &it->second;
            std::string predicate = def ? def->id : expand(ctx, key, true);
            if (!iri::is_absolute(predicate)) continue;  // unmapped keys are dropped
            Term p = Term::iri(predicate);
            if (def && def->list && value.is_array()) {
                out_.push_back({subject, p, list(value, ctx, def)});
                continue;
            }
            if (value.is_array()) {
                for (const auto& v : value) out_.push_back({subject, p, object(v, ctx, def)});
            } else {
                out_.push_back({subject, p, object(value, ctx, def)});
            }
        }
        return subject;
    }

    Term list(const json& items, const Context& ctx, const TermDef* def) {
        if (items.empty()) return Term::iri(std::string(vocab::kRdfNil));
        Term head = fresh_blank();
        Term cur = head;
        for (std::size_t i = 0; i < items.size(); ++i) {
            out_.push_back({cur, Term::iri(std::string(vocab::kRdfFirst)), object(items[i], ctx, def)});
            Term next = i + 1 < items.size() ? fresh_blank() : Term::iri(std::string(vocab::kRdfNil));
            out_.push_back({cur, Term::iri(std::string(vocab::kRdfRest)), next});
            cur = next;
        }
        return head;
    }

    Term object(const json& v, const Context& ctx, const TermDef* def) {
        std::string type = def ? def->type : std::string();
        if (v.is_string()) {
            std::string s = v.get<std::string>();
            if (type == "@id") return node_term(ctx, s);
            if (type == "@vocab") return Term::iri(expand(ctx, s, true));
            if (!type.empty()) return Term::literal(s, type);
            std::string lang = def && def->language ? *def->language : ctx.language;
            return Term::literal(s, {}, lang);
        }
        if (v.is_boolean())
            return Term::literal(v.get<bool>() ? "true" : "false", std::string(vocab::kXsd) + "boolean");
        if (v.is_number_integer() || v.is_number_unsigned())
            return Term::literal(v.dump(), type.empty() || is_keyword(type) ? std::string(vocab::kXsd) + "integer" : type);
        if (v.is_number_float())
            return Term::literal(v.dump(), type.empty() || is_keyword(type) ? std::string(vocab::kXsd) + "double" : type);
        if (v.is_object()) {
            if (v.contains("@value")) {
                const auto& val = v["@value"];
                std::string lex = val.is_string() ? val.get<std::string>() : val.dump();
                std::string dt = v.contains("@type") && v["@type"].is_string()
                                     ? expand(ctx, v["@type"].get<std::string>(), true)
                                     : std::string();
                std::string lang = v.contains("@language") && v["@language"].is_string()
                                       ? v["@language"].get<std::string>()
                                       : std::string();
                if (dt.empty() && !val.is_string()) {
                    if (val.is_boolean()) dt = std::string(vocab::kXsd) + "boolean";
                    else if (val.is_number_integer() || val.is_number_unsigned()) dt = std::string(vocab::kXsd) + "integer";
                    else if (val.is_number_float()) dt = std::string(vocab::kXsd) + "double";
                }
                return Term::literal(lex, dt, lang);
            }
            if (v.contains("@list")) return list(v["@list"], ctx, def);
            return node(v, ctx);
        }
        throw SyntaxError("unsupported JSON-LD value: " + v.dump(), 0, 0);
    }
};

json term_json(const Term& t) {
    json j = json::object();
    if (t.is_iri()) {
        j["@id"] = t.value;
    } else if (t.is_blank()) {
        j["@id"] = "_:" + t.value;
    } else {
        j["@value"] = t.value;
        if (!t.language.empty()) j["@language"] = t.language;
        if (!t.datatype.empty()) j["@type"] = t.datatype;
    }
    return j;
}

}  // namespace

std::vector<Triple> parse_jsonld(std::string_view text, std::string_view base_iri) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SyntaxError(std::string("invalid JSON: ") + e.what(), 0, 0);
    }
    return JsonLdReader(std::string(base_iri)).run(doc);
}

std::string serialize_jsonld(std::span<const Triple> triples) {
    std::map<Term, std::map<std::string, json>> nodes;
    for (const auto& t : triples) {
        auto& props = nodes[t.subject];
        auto& arr = props[t.predicate.value];
        if (arr.is_null()) arr = json::array();
        arr.push_back(term_json(t.object));
    }
    json out = json::array();
    for (const auto& [subject, props] : nodes) {
        json n = json::object();
        n["@id"] = subject.is_blank() ? "_:" + subject.value : subject.value;
        for (const auto& [p, values] : props) n[p] = values;
        out.push_back(std::move(n));
    }
    return out.dump(2) + "\n";
}

}  // namespace fairvoc::rdf
