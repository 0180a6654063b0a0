#include "virtual_web.hpp"

#include <algorithm>
#include <cctype>
#include <nlohmann/json.hpp>
#include <sstream>

#include "fairvoc/error.hpp"
#include "fixtures.hpp"

namespace fairvoc::testing {
namespace {

std::string extension_of(const std::string& path) {
    auto slash = path.rfind('/');
    auto dot = path.rfind('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return {};
    return path.substr(dot + 1);
}

std::string strip_query(const std::string& path) { return path.substr(0, path.find('?')); }

HttpResponse plain(int status, std::string body = {}, std::string type = "text/plain") {
    HttpResponse r;
    r.status = status;
    r.headers.emplace_back("Content-Type", std::move(type));
    r.body = std::move(body);
    return r;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

std::string url_decode(std::string_view s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '%' && i + 2 < s.size()) {
            out += static_cast<char>(std::stoi(std::string(s.substr(i + 1, 2)), nullptr, 16));
            i += 2;
        } else {
            out += s[i] == '+' ? ' ' : s[i];
        }
    }
    return out;
}

}  // namespace

std::shared_ptr<StaticSite> StaticSite::from_directory(const std::filesystem::path& root) {
    auto site = std::make_shared<StaticSite>();
    for (const auto& entry : std::filesystem::recursive_directory_iterator(root)) {
        if (!entry.is_regular_file()) continue;
        std::ifstream in(entry.path(), std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        site->add(std::filesystem::relative(entry.path(), root).generic_string(), ss.str());
    }
    return site;
}

HttpResponse StaticSite::handle(const std::string& path, const Headers&) const {
    std::string p = strip_query(path);
    if (p.empty() || p.back() == '/') p += "index.html";
    auto it = files_.find(p);
    if (it == files_.end()) return plain(404, "not found: " + p);
    static const std::map<std::string, std::string> defaults{
        {"html", "text/html; charset=utf-8"}, {"ttl", "text/turtle"},  {"rdf", "application/rdf+xml"},
        {"owl", "application/rdf+xml"},      {"nt", "application/n-triples"}, {"jsonld", "application/ld+json"},
        {"json", "application/json"},        {"txt", "text/plain"}};
    std::string ext = extension_of(p);
    std::string type = "application/octet-stream";
    if (auto t = types_.find(ext); t != types_.end())
        type = t->second;
    else if (auto d = defaults.find(ext); d != defaults.end())
        type = d->second;
    return plain(200, it->second, type);
}

HtaccessSite::HtaccessSite(const std::string& htaccess, std::shared_ptr<const StaticSite> files)
    : files_(std::move(files)) {
    std::istringstream in(htaccess);
    std::vector<Condition> pending;
    int line_no = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        auto words = split_ws(line);
        if (words.empty() || words[0][0] == '#') continue;
        const std::string& directive = words[0];
        auto bad = [&](const std::string& why) {
            throw std::runtime_error("htaccess line " + std::to_string(line_no) + ": " + why);
        };
        if (directive == "Options") continue;
        if (directive == "AddType") {
            if (words.size() < 3) bad("AddType needs a type and an extension");
            for (std::size_t i = 2; i < words.size(); ++i)
                types_[words[i][0] == '.' ? words[i].substr(1) : words[i]] = words[1];
        } else if (directive == "RewriteEngine") {
            engine_on_ = words.size() > 1 && (words[1] == "on" || words[1] == "On");
        } else if (directive == "RewriteCond") {
            if (words.size() < 3) bad("RewriteCond needs a test string and a pattern");
            Condition c;
            if (words[1] == "%{HTTP_ACCEPT}")
                c.variable = "Accept";
            else if (words[1] == "%{HTTP_USER_AGENT}")
                c.variable = "User-Agent";
            else
                bad("unsupported test string " + words[1]);
            std::string pat = words[2];
            if (!pat.empty() && pat[0] == '!') {
                c.negate = true;
                pat.erase(0, 1);
            }
            bool nocase = false;
            if (words.size() > 3) {
                std::string flags = words[3];
                if (flags.find("OR") != std::string::npos) c.or_next = true;
                if (flags.find("NC") != std::string::npos) nocase = true;
            }
            c.source = pat;
            c.pattern = std::regex(pat, nocase ? std::regex::ECMAScript | std::regex::icase : std::regex::ECMAScript);
            pending.push_back(std::move(c));
        } else if (directive == "RewriteRule") {
            if (words.size() < 3) bad("RewriteRule needs a pattern and a substitution");
            Rule r;
            r.conditions = std::move(pending);
            pending.clear();
            r.pattern = std::regex(words[1]);
            r.substitution = words[2];
            r.line = line_no;
            if (words.size() > 3) {
                std::string flags = words[3];
                if (flags.front() != '[' || flags.back() != ']') bad("malformed flags " + flags);
                std::istringstream fl(flags.substr(1, flags.size() - 2));
                for (std::string f; std::getline(fl, f, ',');) {
                    if (f == "L")
                        r.last = true;
                    else if (f.rfind("R=", 0) == 0)
                        r.redirect = std::stoi(f.substr(2));
                    else if (f == "R")
                        r.redirect = 302;
                    else
                        bad("unsupported flag " + f);
                }
            }
            rules_.push_back(std::move(r));
        } else {
            bad("unsupported directive " + directive);
        }
    }
}

HttpResponse HtaccessSite::handle(const std::string& path, const Headers& headers) const {
    std::string p = strip_query(path);
    if (engine_on_) {
        for (const auto& rule : rules_) {
            std::smatch m;
            if (!std::regex_search(p, m, rule.pattern)) continue;
            // Conditions: an [OR] chain is satisfied by any member; chains are ANDed.
            bool ok = true;
            bool chain = false;
            for (std::size_t i = 0; i < rule.conditions.size(); ++i) {
                const auto& c = rule.conditions[i];
                std::string value = probe::header_value(headers, c.variable);
                bool hit = std::regex_search(value, c.pattern) != c.negate;
                chain = chain || hit;
                if (!c.or_next) {
                    if (!chain) {
                        ok = false;
                        break;
                    }
                    chain = false;
                }
            }
            if (ok && chain == false && !rule.conditions.empty() && rule.conditions.back().or_next) ok = false;
            if (!ok) continue;

            last_line_ = rule.line;
            std::string target;
            for (std::size_t i = 0; i < rule.substitution.size(); ++i) {
                char ch = rule.substitution[i];
                if (ch == '$' && i + 1 < rule.substitution.size() && std::isdigit(static_cast<unsigned char>(rule.substitution[i + 1]))) {
                    target += m[rule.substitution[i + 1] - '0'].str();
                    ++i;
                } else {
                    target += ch;
                }
            }
            if (rule.redirect >= 300 && rule.redirect < 400) {
                HttpResponse r = plain(rule.redirect, "See " + target);
                r.headers.emplace_back("Location", target);
                return r;
            }
            if (rule.redirect != 0) return plain(rule.redirect, "status " + std::to_string(rule.redirect));
            return plain(500, "internal rewrites are not supported by the fixture server");
        }
    }
    last_line_ = 0;
    if (files_) return files_->handle(p, headers);
    return plain(404, "not found: " + p);
}

void VirtualWeb::mount(const std::string& url_prefix, std::shared_ptr<const Site> site) {
    mounts_.emplace_back(url_prefix, std::move(site));
    std::sort(mounts_.begin(), mounts_.end(),
              [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
}

HttpResponse VirtualWeb::send(const HttpRequest& request) {
    ++requests_;
    for (const auto& [prefix, site] : mounts_) {
        if (request.url.compare(0, prefix.size(), prefix) != 0) continue;
        std::string rest = request.url.substr(prefix.size());
        if (!rest.empty() && rest[0] != '/' && rest[0] != '?' && prefix.back() != '/') continue;
        if (!rest.empty() && rest[0] == '/') rest.erase(0, 1);
        return site->handle(rest, request.headers);
    }
    throw TransportError("could not resolve host for " + request.url, false);
}

std::shared_ptr<Site> prefix_registry(std::map<std::string, std::string> prefixes) {
    return std::make_shared<FunctionSite>([prefixes = std::move(prefixes)](const std::string& path, const Headers&) {
        const std::string suffix = ".file.txt";
        std::string p = strip_query(path);
        if (p.size() <= suffix.size() || p.compare(p.size() - suffix.size(), suffix.size(), suffix) != 0)
            return plain(404);
        auto it = prefixes.find(url_decode(p.substr(0, p.size() - suffix.size())));
        if (it == prefixes.end()) return plain(404, "Unknown prefix");
        return plain(200, it->first + "\t" + it->second + "\n");
    });
}

std::shared_ptr<Site> lov_registry(std::vector<std::string> namespaces) {
    return std::make_shared<FunctionSite>([namespaces = std::move(namespaces)](const std::string& path, const Headers&) {
        if (strip_query(path) != "dataset/lov/api/v2/vocabulary/search") return plain(404);
        auto q = path.find("q=");
        std::string query = q == std::string::npos ? "" : url_decode(path.substr(q + 2, path.find('&', q) - q - 2));
        nlohmann::ordered_json doc;
        doc["total_results"] = 0;
        doc["results"] = nlohmann::ordered_json::array();
        for (const auto& ns : namespaces) {
            std::string uri = ns;
            if (!uri.empty() && (uri.back() == '#' || uri.back() == '/')) uri.pop_back();
            if (query.empty() || (ns.find(query) == std::string::npos && query.find(uri) == std::string::npos))
                continue;
            nlohmann::ordered_json hit;
            hit["uri"] = {uri};
            hit["nsp"] = {ns};
            hit["type"] = "vocabulary";
            doc["results"].push_back(hit);
        }
        doc["total_results"] = doc["results"].size();
        return plain(200, doc.dump(), "application/json");
    });
}

std::map<std::string, std::string> default_prefixes() {
    return {{"example", "http://example.org/"},
            {"exo", "https://w3id.org/example#"},
            {"dcat", "http://www.w3.org/ns/dcat#"},
            {"foaf", "http://xmlns.com/foaf/0.1/"},
            {"dcterms", "http://purl.org/dc/terms/"}};
}

std::vector<std::string> default_lov_namespaces() {
    return {"http://www.w3.org/ns/dcat#", "http://xmlns.com/foaf/0.1/", "http://purl.org/dc/terms/"};
}

void mount_registries(VirtualWeb& web) {
    web.mount("http://prefix.cc", prefix_registry(default_prefixes()));
    web.mount("https://lov.linkeddata.es", lov_registry(default_lov_namespaces()));
}

std::shared_ptr<VirtualWeb> example_web() {
    auto web = std::make_shared<VirtualWeb>();
    web->mount("https://w3id.org/example", std::make_shared<HtaccessSite>(read_fixture("publication/htaccess")));
    web->mount("https://dgarijo.github.io/example", StaticSite::from_directory(fixture_path("publication/site")));
    mount_registries(*web);
    return web;
}

std::shared_ptr<VirtualWeb> serve_release(const std::string& ontology_iri, const std::string& doc_base_url,
                                          const std::vector<std::pair<std::string, std::string>>& files) {
    auto strip = [](std::string s) {
        if (!s.empty() && (s.back() == '#' || s.back() == '/')) s.pop_back();
        return s;
    };
    auto docs = std::make_shared<StaticSite>();
    std::string htaccess;
    for (const auto& [path, content] : files) {
        if (path == ".htaccess")
            htaccess = content;
        else
            docs->add(path, content);
    }
    auto web = std::make_shared<VirtualWeb>();
    web->mount(strip(ontology_iri), std::make_shared<HtaccessSite>(htaccess));
    web->mount(strip(doc_base_url), docs);
    mount_registries(*web);
    return web;
}

}  // namespace fairvoc::testing
