// Turtle 1.1 reader. N-Triples documents are valid Turtle and go through
// the same path.
#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "fairvoc/error.hpp"
#include "fairvoc/rdf/iri.hpp"
#include "fairvoc/rdf/parse.hpp"
#include "fairvoc/rdf/vocab.hpp"
#include "text_util.hpp"

namespace fairvoc::rdf {

namespace {

bool is_name_char(unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '-' || c >= 0x80;
}

class TurtleReader {
  public:
    TurtleReader(std::string_view text, std::string_view base) : text_(text), base_(base) {}

    std::vector<Triple> run() {
        skip_ws();
        while (!eof()) {
            statement();
            skip_ws();
        }
        return std::move(out_);
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
    std::string base_;
    std::map<std::string, std::string> prefixes_;
    std::map<std::string, std::string> labels_;
    std::vector<Triple> out_;
    std::size_t fresh_ = 0;

    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, line_, col_); }

    bool eof() const { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }
    char get() {
        if (eof()) fail("unexpected end of input");
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        get();
    }

    void skip_ws() {
        while (!eof()) {
            char c = peek();
            if (c == '#') {
                while (!eof() && peek() != '\n') get();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                get();
            } else {
                break;
            }
        }
    }

    bool keyword_ahead(std::string_view word, bool case_insensitive) const {
        if (text_.size() - pos_ < word.size()) return false;
        for (std::size_t i = 0; i < word.size(); ++i) {
            char a = text_[pos_ + i];
            char b = word[i];
            if (case_insensitive ? std::toupper(static_cast<unsigned char>(a)) != b : a != b)
                return false;
        }
        char next = peek(word.size());
        return !is_name_char(static_cast<unsigned char>(next)) && next != ':';
    }

    void statement() {
        if (peek() == '@') {
            if (keyword_ahead("@prefix", false)) {
                advance(7);
                prefix_directive();
                expect('.');
                return;
            }
            if (keyword_ahead("@base", false)) {
                advance(5);
                base_directive();
                expect('.');
                return;
            }
            fail("unknown directive");
        }
        if (keyword_ahead("PREFIX", true)) {
            advance(6);
            prefix_directive();
            return;
        }
        if (keyword_ahead("BASE", true)) {
            advance(4);
            base_directive();
            return;
        }
        triples();
        expect('.');
    }

    void advance(std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) get();
    }

    void prefix_directive() {
        skip_ws();
        std::string name;
        while (!eof() && peek() != ':') {
            char c = peek();
            if (!is_name_char(static_cast<unsigned char>(c)) && c != '.') fail("bad prefix name");
            name += get();
        }
        if (eof()) fail("expected ':' in prefix declaration");
        get();
        skip_ws();
        prefixes_[name] = iriref();
    }

    void base_directive() {
        skip_ws();
        base_ = iriref();
    }

    void triples() {
        skip_ws();
        if (peek() == '[') {
            Term subject = blank_property_list();
            skip_ws();
            if (peek() != '.') predicate_object_list(subject);
            return;
        }
        Term subject = subject_term();
        predicate_object_list(subject);
    }

    Term subject_term() {
        skip_ws();
        char c = peek();
        if (c == '<') return Term::iri(iriref());
        if (c == '_' && peek(1) == ':') return blank_label();
        if (c == '(') return collection();
        return Term::iri(prefixed_name());
    }

    void predicate_object_list(const Term& subject) {
        for (;;) {
            skip_ws();
            Term predicate = verb();
            object_list(subject, predicate);
            skip_ws();
            if (peek() != ';') return;
            while (peek() == ';') {
                get();
                skip_ws();
            }
            char c = peek();
            if (c == '.' || c == ']' || eof()) return;
        }
    }

    Term verb() {
        if (peek() == 'a' && !is_name_char(static_cast<unsigned char>(peek(1))) && peek(1) != ':')
        {
            get();
            return Term::iri(std::string(vocab::kRdfType));
        }
        if (peek() == '<') return Term::iri(iriref());
        return Term::iri(prefixed_name());
    }

    void object_list(const Term& subject, const Term& predicate) {
        for (;;) {
            Term o = object();
            out_.push_back({subject, predicate, std::move(o)});
            skip_ws();
            if (peek() != ',') return;
            get();
        }
    }

    Term object() {
        skip_ws();
        char c = peek();
        if (c == '<') return Term::iri(iriref());
        if (c == '_' && peek(1) == ':') return blank_label();
        if (c == '[') return blank_property_list();
        if (c == '(') return collection();
        if (c == '"' || c == '\'') return rdf_literal();
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-' ||
            (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))))
            return numeric_literal();
        if (keyword_ahead("true", false) || keyword_ahead("false", false)) {
            std::string v = peek() == 't' ? "true" : "false";
            advance(v.size());
            return Term::literal(v, std::string(vocab::kXsd) + "boolean");
        }
        if (eof()) fail("unexpected end of input");
        return Term::iri(prefixed_name());
    }

    Term fresh_blank() { return Term::blank("_g" + std::to_string(fresh_++)); }

    Term blank_property_list() {
        get();  // '['
        Term node = fresh_blank();
        skip_ws();
        if (peek() == ']') {
            get();
            return node;
        }
        predicate_object_list(node);
        expect(']');
        return node;
    }

    Term collection() {
        get();  // '('
        std::vector<Term> items;
        for (;;) {
            skip_ws();
            if (peek() == ')') {
                get();
                break;
            }
            if (eof()) fail("unterminated collection");
            items.push_back(object());
        }
        if (items.empty()) return Term::iri(std::string(vocab::kRdfNil));
        Term head = fresh_blank();
        Term cur = head;
        for (std::size_t i = 0; i < items.size(); ++i) {
            out_.push_back({cur, Term::iri(std::string(vocab::kRdfFirst)), items[i]});
            Term next = i + 1 < items.size() ? fresh_blank() : Term::iri(std::string(vocab::kRdfNil));
            out_.push_back({cur, Term::iri(std::string(vocab::kRdfRest)), next});
            cur = next;
        }
        return head;
    }

    Term blank_label() {
        advance(2);
        std::string label;
        while (!eof()) {
            unsigned char c = static_cast<unsigned char>(peek());
            if (is_name_char(c) || (c == '.' && is_name_char(static_cast<unsigned char>(peek(1)))))
                label += get();
            else
                break;
        }
        if (label.empty()) fail("empty blank node label");
        return Term::blank(label);
    }

    std::string iriref() {
        if (peek() != '<') fail("expected IRI");
        get();
        std::string value;
        for (;;) {
            if (eof()) fail("unterminated IRI");
            char c = get();
            if (c == '>') break;
            if (c == '\\') {
                char e = get();
                if (e != 'u' && e != 'U') fail("bad escape in IRI");
                value += read_unicode_escape(e == 'u' ? 4 : 8);
            } else if (c == ' ' || c == '\n' || c == '<' || c == '"') {
                fail("illegal character in IRI");
            } else {
                value += c;
            }
        }
        return iri::resolve(base_, value);
    }

    std::string read_unicode_escape(int digits) {
        std::string hex;
        for (int i = 0; i < digits; ++i) {
            char h = get();
            if (!std::isxdigit(static_cast<unsigned char>(h))) fail("bad unicode escape");
            hex += h;
        }
        return detail::utf8_encode(static_cast<char32_t>(std::stoul(hex, nullptr, 16)));
    }

    std::string prefixed_name() {
        std::string prefix;
        while (!eof() && peek() != ':') {
            unsigned char c = static_cast<unsigned char>(peek());
            if (!is_name_char(c) && c != '.') fail("expected IRI, prefixed name or literal");
            prefix += get();
        }
        if (eof()) fail("expected ':' in prefixed name");
        get();
        auto it = prefixes_.find(prefix);
        if (it == prefixes_.end()) fail("undeclared prefix '" + prefix + "'");
        std::string local;
        while (!eof()) {
            unsigned char c = static_cast<unsigned char>(peek());
            if (is_name_char(c) || c == ':') {
                local += get();
            } else if (c == '.' && (is_name_char(static_cast<unsigned char>(peek(1))) ||
                                    peek(1) == ':' || peek(1) == '%' || peek(1) == '\\')) {
                local += get();
            } else if (c == '%') {
                local += get();
                for (int i = 0; i < 2; ++i) {
                    if (!std::isxdigit(static_cast<unsigned char>(peek()))) fail("bad percent escape");
                    local += get();
                }
            } else if (c == '\\') {
                get();
                local += get();
            } else {
                break;
            }
        }
        return it->second + local;
    }

    Term rdf_literal() {
        char quote = get();
        bool longq = peek() == quote && peek(1) == quote;
        if (longq) advance(2);
        std::string value;
        for (;;) {
            if (eof()) fail("unterminated string literal");
            char c = peek();
            if (longq) {
                if (c == quote && peek(1) == quote && peek(2) == quote && peek(3) != quote) {
                    advance(3);
                    break;
                }
            } else if (c == quote) {
                get();
                break;
            } else if (c == '\n' || c == '\r') {
                fail("newline in short string literal");
            }
            get();
            if (c == '\\') {
                char e = get();
                switch (e) {
                    case 't': value += '\t'; break;
                    case 'b': value += '\b'; break;
                    case 'n': value += '\n'; break;
                    case 'r': value += '\r'; break;
                    case 'f': value += '\f'; break;
                    case '"': value += '"'; break;
                    case '\'': value += '\''; break;
                    case '\\': value += '\\'; break;
                    case 'u': value += read_unicode_escape(4); break;
                    case 'U': value += read_unicode_escape(8); break;
                    default: fail("bad string escape");
                }
            } else {
                value += c;
            }
        }
        if (peek() == '@') {
            get();
            std::string lang;
            while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-'))
                lang += get();
            if (lang.empty()) fail("empty language tag");
            return Term::literal(std::move(value), {}, lang);
        }
        if (peek() == '^' && peek(1) == '^') {
            advance(2);
            std::string dt = peek() == '<' ? iriref() : prefixed_name();
            return Term::literal(std::move(value), std::move(dt));
        }
        return Term::literal(std::move(value));
    }

    Term numeric_literal() {
        std::string lex;
        if (peek() == '+' || peek() == '-') lex += get();
        bool digits = false;
        bool dot = false;
        bool exp = false;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            lex += get();
            digits = true;
        }
        if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
            dot = true;
            lex += get();
            while (std::isdigit(static_cast<unsigned char>(peek()))) lex += get();
            digits = true;
        }
        if (digits && (peek() == 'e' || peek() == 'E')) {
            exp = true;
            lex += get();
            if (peek() == '+' || peek() == '-') lex += get();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("bad exponent");
            while (std::isdigit(static_cast<unsigned char>(peek()))) lex += get();
        }
        if (!digits) fail("bad numeric literal");
        std::string type = exp ? "double" : dot ? "decimal" : "integer";
        return Term::literal(std::move(lex), std::string(vocab::kXsd) + type);
    }
};

}  // namespace

std::vector<Triple> parse_turtle(std::string_view text, std::string_view base_iri) {
    return TurtleReader(text, base_iri).run();
}

}  // namespace fairvoc::rdf
