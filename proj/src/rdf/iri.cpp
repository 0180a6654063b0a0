#include "fairvoc/rdf/iri.hpp"

#include <algorithm>
#include <cctype>

namespace fairvoc::iri {

namespace {

struct Parts {
    std::string scheme;
    bool has_authority = false;
    std::string authority;
    std::string path;
    bool has_query = false;
    std::string query;
    bool has_fragment = false;
    std::string fragment;
};

Parts split(std::string_view ref) {
    Parts p;
    if (auto hash = ref.find('#'); hash != std::string_view::npos) {
        p.has_fragment = true;
        p.fragment = std::string(ref.substr(hash + 1));
        ref = ref.substr(0, hash);
    }
    if (auto q = ref.find('?'); q != std::string_view::npos) {
        p.has_query = true;
        p.query = std::string(ref.substr(q + 1));
        ref = ref.substr(0, q);
    }
    if (is_absolute(ref)) {
        auto colon = ref.find(':');
        p.scheme = std::string(ref.substr(0, colon));
        ref = ref.substr(colon + 1);
    }
    if (ref.starts_with("//")) {
        ref = ref.substr(2);
        auto slash = ref.find('/');
        p.has_authority = true;
        p.authority = std::string(ref.substr(0, slash));
        ref = slash == std::string_view::npos ? std::string_view{} : ref.substr(slash);
    }
    p.path = std::string(ref);
    return p;
}

std::string remove_dot_segments(std::string_view input) {
    std::string in(input);
    std::string out;
    while (!in.empty()) {
        if (in.starts_with("../")) {
            in.erase(0, 3);
        } else if (in.starts_with("./")) {
            in.erase(0, 2);
        } else if (in.starts_with("/./")) {
            in.erase(0, 2);
        } else if (in == "/.") {
            in = "/";
        } else if (in.starts_with("/../") || in == "/..") {
            in = in == "/.." ? "/" : in.substr(3);
            auto last = out.rfind('/');
            out.erase(last == std::string::npos ? 0 : last);
        } else if (in == "." || in == "..") {
            in.clear();
        } else {
            auto start = in[0] == '/' ? 1 : 0;
            auto next = in.find('/', start);
            out += in.substr(0, next);
            in.erase(0, next == std::string::npos ? in.size() : next);
        }
    }
    return out;
}

std::string merge(const Parts& base, std::string_view ref_path) {
    if (base.has_authority && base.path.empty()) return "/" + std::string(ref_path);
    auto last = base.path.rfind('/');
    if (last == std::string::npos) return std::string(ref_path);
    return base.path.substr(0, last + 1) + std::string(ref_path);
}

std::string compose(const Parts& p) {
    std::string out;
    if (!p.scheme.empty()) out += p.scheme + ":";
    if (p.has_authority) out += "//" + p.authority;
    out += p.path;
    if (p.has_query) out += "?" + p.query;
    if (p.has_fragment) out += "#" + p.fragment;
    return out;
}

}  // namespace

bool is_absolute(std::string_view text) noexcept {
    if (text.empty() || !std::isalpha(static_cast<unsigned char>(text[0]))) return false;
    for (std::size_t i = 1; i < text.size(); ++i) {
        char c = text[i];
        if (c == ':') return true;
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.')
            return false;
    }
    return false;
}

std::string resolve(std::string_view base, std::string_view reference) {
    if (base.empty()) return std::string(reference);
    Parts r = split(reference);
    if (!r.scheme.empty()) {
        r.path = remove_dot_segments(r.path);
        return compose(r);
    }
    Parts b = split(base);
    Parts t;
    t.scheme = b.scheme;
    if (r.has_authority) {
        t.has_authority = true;
        t.authority = r.authority;
        t.path = remove_dot_segments(r.path);
        t.has_query = r.has_query;
        t.query = r.query;
    } else {
        t.has_authority = b.has_authority;
        t.authority = b.authority;
        if (r.path.empty()) {
            t.path = b.path;
            t.has_query = r.has_query || b.has_query;
            t.query = r.has_query ? r.query : b.query;
        } else {
            t.path = r.path[0] == '/' ? remove_dot_segments(r.path)
                                      : remove_dot_segments(merge(b, r.path));
            t.has_query = r.has_query;
            t.query = r.query;
        }
    }
    t.has_fragment = r.has_fragment;
    t.fragment = r.fragment;
    return compose(t);
}

std::string host(std::string_view text) {
    Parts p = split(text);
    if (!p.has_authority) return {};
    std::string authority = p.authority;
    if (auto at = authority.rfind('@'); at != std::string::npos) authority.erase(0, at + 1);
    if (!authority.empty() && authority[0] == '[') {
        auto close = authority.find(']');
        authority = authority.substr(0, close == std::string::npos ? authority.size() : close + 1);
    } else if (auto colon = authority.find(':'); colon != std::string::npos) {
        authority.erase(colon);
    }
    std::transform(authority.begin(), authority.end(), authority.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return authority;
}

std::string path(std::string_view text) { return split(text).path; }

std::string strip_fragment(std::string_view text) {
    return std::string(text.substr(0, text.find('#')));
}

std::string strip_terminator(std::string_view text) {
    if (!text.empty() && (text.back() == '#' || text.back() == '/')) text.remove_suffix(1);
    return std::string(text);
}

std::string local_name(std::string_view text) {
    auto cut = text.find_last_of("#/:");
    if (cut == std::string_view::npos) return std::string(text);
    return std::string(text.substr(cut + 1));
}

}  // namespace fairvoc::iri
