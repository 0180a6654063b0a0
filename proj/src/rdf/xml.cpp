#include "xml.hpp"

#include <cctype>
#include <map>

#include "fairvoc/error.hpp"
#include "text_util.hpp"

namespace fairvoc::rdf::xml {

namespace {

bool name_char(unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '-' || c == '.' || c == ':' || c >= 0x80;
}

struct RawAttr {
    std::string qname;
    std::string value;
};

class Reader {
  public:
    explicit Reader(std::string_view text) : text_(text) {}

    std::unique_ptr<Element> run() {
        if (text_.starts_with("\xEF\xBB\xBF")) advance(3);
        misc();
        if (starts("<!DOCTYPE")) {
            doctype();
            misc();
        }
        if (peek() != '<') fail("expected root element");
        std::vector<std::map<std::string, std::string>> scopes{{{"xml", std::string(kXmlNs)}}};
        auto root = element(scopes);
        misc();
        if (!eof()) fail("content after root element");
        return root;
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
    std::map<std::string, std::string> entities_;

    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, line_, col_); }

    bool eof() const { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }
    bool starts(std::string_view s) const { return text_.substr(pos_).starts_with(s); }
    char get() {
        if (eof()) fail("unexpected end of document");
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void advance(std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) get();
    }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) get();
    }
    void skip_until(std::string_view terminator) {
        while (!starts(terminator)) {
            if (eof()) fail("unterminated markup");
            get();
        }
        advance(terminator.size());
    }

    // Whitespace, comments and processing instructions outside the root.
    void misc() {
        for (;;) {
            skip_ws();
            if (starts("<?")) {
                skip_until("?>");
            } else if (starts("<!--")) {
                skip_until("-->");
            } else {
                return;
            }
        }
    }

    std::string name() {
        std::string out;
        while (!eof() && name_char(static_cast<unsigned char>(peek()))) out += get();
        if (out.empty()) fail("expected name");
        return out;
    }

    std::string quoted_raw() {
        char q = get();
        if (q != '"' && q != '\'') fail("expected quoted value");
        std::string out;
        while (peek() != q) out += get();
        get();
        return out;
    }

    void doctype() {
        advance(9);
        int depth = 0;
        while (!eof()) {
            if (peek() == '[') {
                get();
                ++depth;
                continue;
            }
            if (peek() == ']') {
                get();
                --depth;
                continue;
            }
            if (depth > 0 && starts("<!ENTITY")) {
                advance(8);
                skip_ws();
                bool parameter = peek() == '%';
                if (parameter) {
                    get();
                    skip_ws();
                }
                std::string key = name();
                skip_ws();
                if (peek() == '"' || peek() == '\'') {
                    std::string value = quoted_raw();
                    if (!parameter) entities_[key] = expand(value, 0);
                }
                skip_until(">");
                continue;
            }
            if (depth > 0 && starts("<!--")) {
                skip_until("-->");
                continue;
            }
            if (depth == 0 && peek() == '>') {
                get();
                return;
            }
            get();
        }
        fail("unterminated DOCTYPE");
    }

    std::string expand(std::string_view raw, int depth) {
        if (depth > 8) fail("entity expansion too deep");
        std::string out;
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (raw[i] != '&') {
                out += raw[i];
                continue;
            }
            auto semi = raw.find(';', i);
            if (semi == std::string_view::npos) fail("unterminated entity reference");
            std::string ref(raw.substr(i + 1, semi - i - 1));
            i = semi;
            if (ref.empty()) fail("empty entity reference");
            if (ref[0] == '#') {
                unsigned long cp = 0;
                try {
                    cp = ref.size() > 1 && (ref[1] == 'x' || ref[1] == 'X')
                             ? std::stoul(ref.substr(2), nullptr, 16)
                             : std::stoul(ref.substr(1), nullptr, 10);
                } catch (const std::exception&) {
                    fail("bad character reference");
                }
                out += detail::utf8_encode(static_cast<char32_t>(cp));
            } else if (ref == "lt") {
                out += '<';
            } else if (ref == "gt") {
                out += '>';
            } else if (ref == "amp") {
                out += '&';
            } else if (ref == "quot") {
                out += '"';
            } else if (ref == "apos") {
                out += '\'';
            } else if (auto it = entities_.find(ref); it != entities_.end()) {
                out += expand(it->second, depth + 1);
            } else {
                fail("undefined entity '" + ref + "'");
            }
        }
        return out;
    }

    static std::pair<std::string, std::string> split_qname(const std::string& q) {
        auto colon = q.find(':');
        if (colon == std::string::npos) return {"", q};
        return {q.substr(0, colon), q.substr(colon + 1)};
    }

    std::string lookup(const std::vector<std::map<std::string, std::string>>& scopes,
                       const std::string& prefix) {
        for (auto it = scopes.rbegin(); it != scopes.rend(); ++it)
            if (auto f = it->find(prefix); f != it->end()) return f->second;
        if (prefix.empty()) return {};
        fail("undeclared namespace prefix '" + prefix + "'");
    }

    std::unique_ptr<Element> element(std::vector<std::map<std::string, std::string>>& scopes) {
        auto el = std::make_unique<Element>();
        el->line = line_;
        el->column = col_;
        get();  // '<'
        std::string qname = name();
        std::vector<RawAttr> raw;
        bool empty = false;
        for (;;) {
            skip_ws();
            if (peek() == '/' && peek(1) == '>') {
                advance(2);
                empty = true;
                break;
            }
            if (peek() == '>') {
                get();
                break;
            }
            std::string an = name();
            skip_ws();
            if (get() != '=') fail("expected '=' after attribute name");
            skip_ws();
            raw.push_back({an, expand(quoted_raw(), 0)});
        }

        std::map<std::string, std::string> scope;
        for (const auto& a : raw) {
            if (a.qname == "xmlns")
                scope[""] = a.value;
            else if (a.qname.starts_with("xmlns:"))
                scope[a.qname.substr(6)] = a.value;
        }
        scopes.push_back(std::move(scope));

        auto [prefix, local] = split_qname(qname);
        el->ns = lookup(scopes, prefix);
        el->local = local;
        for (const auto& a : raw) {
            if (a.qname == "xmlns" || a.qname.starts_with("xmlns:")) continue;
            auto [ap, al] = split_qname(a.qname);
            el->attributes.push_back({ap.empty() ? std::string() : lookup(scopes, ap), al, a.value});
        }

        if (!empty) content(*el, qname, scopes);
        scopes.pop_back();
        return el;
    }

    void content(Element& el, const std::string& qname,
                 std::vector<std::map<std::string, std::string>>& scopes) {
        std::size_t begin = pos_;
        for (;;) {
            if (eof()) fail("unterminated element <" + qname + ">");
            if (starts("</")) {
                el.raw = std::string(text_.substr(begin, pos_ - begin));
                advance(2);
                std::string closing = name();
                if (closing != qname) fail("mismatched end tag </" + closing + ">");
                skip_ws();
                if (get() != '>') fail("expected '>'");
                return;
            }
            if (starts("<!--")) {
                skip_until("-->");
            } else if (starts("<![CDATA[")) {
                advance(9);
                std::size_t start = pos_;
                skip_until("]]>");
                el.text += std::string(text_.substr(start, pos_ - start - 3));
            } else if (starts("<?")) {
                skip_until("?>");
            } else if (peek() == '<') {
                el.children.push_back(element(scopes));
            } else {
                std::string chunk;
                while (!eof() && peek() != '<') chunk += get();
                el.text += expand(chunk, 0);
            }
        }
    }
};

}  // namespace

const Attribute* Element::find(std::string_view want_ns, std::string_view want_local) const {
    for (const auto& a : attributes)
        if (a.ns == want_ns && a.local == want_local) return &a;
    return nullptr;
}

std::unique_ptr<Element> parse(std::string_view text) { return Reader(text).run(); }

}  // namespace fairvoc::rdf::xml
