#include "fairvoc/probe/findability.hpp"

#include <algorithm>
#include <cctype>
#include <ctime>
#include <nlohmann/json.hpp>
#include <sstream>

#include "fairvoc/audit/catalog.hpp"
#include "fairvoc/rdf/iri.hpp"

namespace fairvoc::probe {
namespace {

using audit::Status;
using nlohmann::json;

std::string fill(std::string pattern, std::string_view placeholder, const std::string& value) {
    auto pos = pattern.find(placeholder);
    if (pos != std::string::npos) pattern.replace(pos, placeholder.size(), value);
    return pattern;
}

// Fetch with redirects; nullopt plus evidence when nothing usable came back.
NegotiationTrace fetch(Transport& transport, const std::string& url, const std::string& accept,
                       const RetryPolicy& retry) {
    ProbeRequest req{url, accept, 5, std::chrono::milliseconds(30000), false};
    return probe(transport, req, retry);
}

bool same_namespace(std::string_view a, std::string_view b) {
    return a == b || iri::strip_terminator(a) == iri::strip_terminator(b);
}

void collect_strings(const json& value, std::vector<std::string>& out) {
    if (value.is_string())
        out.push_back(value.get<std::string>());
    else if (value.is_array())
        for (const auto& v : value) collect_strings(v, out);
}

bool context_mentions_schema_org(const json& ctx) {
    if (ctx.is_string()) return ctx.get<std::string>().find("schema.org") != std::string::npos;
    if (ctx.is_array())
        return std::any_of(ctx.begin(), ctx.end(), [](const json& c) { return context_mentions_schema_org(c); });
    if (ctx.is_object())
        return std::any_of(ctx.begin(), ctx.end(), [](const json& c) { return context_mentions_schema_org(c); });
    return false;
}

std::string lower(std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

// Value of attribute `name` inside a start tag's attribute text.
std::string attribute(std::string_view attrs, std::string_view name) {
    std::string low = lower(attrs);
    std::size_t pos = 0;
    while ((pos = low.find(name, pos)) != std::string::npos) {
        bool boundary = pos == 0 || std::isspace(static_cast<unsigned char>(low[pos - 1]));
        std::size_t i = pos + name.size();
        while (i < low.size() && std::isspace(static_cast<unsigned char>(low[i]))) ++i;
        if (!boundary || i >= low.size() || low[i] != '=') {
            pos += name.size();
            continue;
        }
        ++i;
        while (i < low.size() && std::isspace(static_cast<unsigned char>(low[i]))) ++i;
        if (i < low.size() && (low[i] == '"' || low[i] == '\'')) {
            char q = low[i];
            auto end = low.find(q, i + 1);
            return std::string(attrs.substr(i + 1, end == std::string::npos ? std::string::npos : end - i - 1));
        }
        auto end = i;
        while (end < low.size() && !std::isspace(static_cast<unsigned char>(low[end])) && low[end] != '>') ++end;
        return std::string(attrs.substr(i, end - i));
    }
    return {};
}

// Removes commas that directly precede '}' or ']' outside string literals.
std::string drop_trailing_commas(std::string_view text) {
    std::string out;
    bool in_string = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (in_string) {
            out += c;
            if (c == '\\' && i + 1 < text.size()) out += text[++i];
            else if (c == '"') in_string = false;
            continue;
        }
        if (c == '"') in_string = true;
        if (c == ',') {
            auto next = text.find_first_not_of(" \t\r\n", i + 1);
            if (next != std::string_view::npos && (text[next] == '}' || text[next] == ']')) continue;
        }
        out += c;
    }
    return out;
}

}  // namespace

std::string utc_now() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string url_encode(std::string_view text) {
    static const char* hex = "0123456789ABCDEF";
    std::string out;
    for (unsigned char c : text) {
        if (std::isalnum(c) || c == '-' || c == '.' || c == '_' || c == '~') {
            out += static_cast<char>(c);
        } else {
            out += '%';
            out += hex[c >> 4];
            out += hex[c & 15];
        }
    }
    return out;
}

RegistryFinding lookup_prefix(Transport& transport, const std::string& prefix, const RegistryEndpoints& endpoints,
                              const Clock& clock, const RetryPolicy& retry) {
    RegistryFinding finding{"prefix.cc", prefix, Outcome::Unreachable, {}, {}, clock()};
    auto trace = fetch(transport, fill(endpoints.prefixcc, "{prefix}", url_encode(prefix)), "text/plain", retry);
    if (trace.failure != ProbeFailure::None) {
        finding.evidence = trace.failure_detail;
        return finding;
    }
    if (trace.final_status == 404) {
        finding.outcome = Outcome::NotFound;
        finding.evidence = "prefix.cc has no mapping for '" + prefix + "'";
        return finding;
    }
    if (trace.final_status != 200) {
        finding.evidence = "prefix.cc answered HTTP " + std::to_string(trace.final_status);
        return finding;
    }
    std::istringstream lines(trace.body);
    for (std::string line; std::getline(lines, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto tab = line.find('\t');
        if (tab == std::string::npos) continue;
        if (line.substr(0, tab) == prefix) finding.values.push_back(line.substr(tab + 1));
    }
    finding.outcome = finding.values.empty() ? Outcome::NotFound : Outcome::Found;
    finding.evidence = finding.values.empty() ? "prefix.cc response lists no namespace for '" + prefix + "'"
                                              : "prefix.cc maps '" + prefix + "' to " + finding.values.front();
    return finding;
}

RegistryFinding lookup_lov(Transport& transport, const std::string& namespace_iri, const RegistryEndpoints& endpoints,
                           const Clock& clock, const RetryPolicy& retry) {
    RegistryFinding finding{"LOV", namespace_iri, Outcome::Unreachable, {}, {}, clock()};
    auto trace = fetch(transport, fill(endpoints.lov, "{namespace}", url_encode(namespace_iri)),
                       "application/json", retry);
    if (trace.failure != ProbeFailure::None) {
        finding.evidence = trace.failure_detail;
        return finding;
    }
    if (trace.final_status == 404) {
        finding.outcome = Outcome::NotFound;
        finding.evidence = "LOV returned 404 for the search";
        return finding;
    }
    if (trace.final_status != 200) {
        finding.evidence = "LOV answered HTTP " + std::to_string(trace.final_status);
        return finding;
    }
    json doc = json::parse(trace.body, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
        finding.evidence = "LOV response is not a JSON object";
        return finding;
    }
    for (const auto& result : doc.value("results", json::array())) {
        if (!result.is_object()) continue;
        std::vector<std::string> ids;
        for (const json* src : {&result, result.contains("_source") ? &result["_source"] : nullptr}) {
            if (!src || !src->is_object()) continue;
            for (const char* key : {"uri", "nsp"})
                if (src->contains(key)) collect_strings((*src)[key], ids);
        }
        for (const auto& id : ids)
            if (same_namespace(id, namespace_iri) &&
                std::find(finding.values.begin(), finding.values.end(), id) == finding.values.end())
                finding.values.push_back(id);
    }
    finding.outcome = finding.values.empty() ? Outcome::NotFound : Outcome::Found;
    finding.evidence = finding.values.empty() ? "no LOV vocabulary with namespace " + namespace_iri
                                              : "LOV lists " + finding.values.front();
    return finding;
}

audit::CheckResult check_prefix_registry(const RegistryFinding& finding, const std::string& namespace_iri) {
    const char* id = "findability.prefix_registry";
    switch (finding.outcome) {
        case Outcome::Unreachable:
            return audit::make_result(id, Status::Warn, "prefix.cc unreachable: " + finding.evidence);
        case Outcome::NotFound:
            return audit::make_result(id, Status::Info,
                                      "prefix '" + finding.queried + "' is not registered at prefix.cc");
        case Outcome::Found: break;
    }
    for (const auto& ns : finding.values)
        if (same_namespace(ns, namespace_iri))
            return audit::make_result(id, Status::Pass,
                                      "prefix '" + finding.queried + "' is registered for " + ns, finding.values);
    return audit::make_result(id, Status::Warn,
                              "prefix '" + finding.queried + "' is already registered for " +
                                  finding.values.front() + ", not " + namespace_iri,
                              finding.values);
}

audit::CheckResult check_lov_registry(const RegistryFinding& finding) {
    const char* id = "findability.lov_registry";
    switch (finding.outcome) {
        case Outcome::Found:
            return audit::make_result(id, Status::Pass, finding.evidence, finding.values);
        case Outcome::NotFound:
            return audit::make_result(id, Status::Info, "not registered in LOV: " + finding.queried);
        case Outcome::Unreachable: break;
    }
    return audit::make_result(id, Status::Info, "LOV unreachable: " + finding.evidence);
}

audit::CheckResult detect_jsonld_annotations(std::string_view html) {
    const char* id = "findability.jsonld_annotations";
    std::string low = lower(html);
    std::size_t pos = 0;
    int scripts = 0;
    std::vector<std::string> problems;
    while ((pos = low.find("<script", pos)) != std::string::npos) {
        auto tag_end = low.find('>', pos);
        if (tag_end == std::string::npos) break;
        std::string_view attrs = html.substr(pos + 7, tag_end - pos - 7);
        auto close = low.find("</script", tag_end);
        std::string_view content =
            html.substr(tag_end + 1, close == std::string::npos ? std::string::npos : close - tag_end - 1);
        pos = close == std::string::npos ? low.size() : close;
        if (lower(attribute(attrs, "type")) != "application/ld+json") continue;
        ++scripts;

        json doc;
        bool relaxed = false;
        try {
            doc = json::parse(content);
        } catch (const json::parse_error& e) {
            // Hand-written snippets often keep a trailing comma; accept that one slip.
            doc = json::parse(drop_trailing_commas(content), nullptr, false);
            if (doc.is_discarded()) {
                problems.push_back(std::string("invalid JSON: ") + e.what());
                continue;
            }
            relaxed = true;
        }
        std::vector<const json*> nodes;
        if (doc.is_array())
            for (const auto& n : doc) nodes.push_back(&n);
        else
            nodes.push_back(&doc);
        for (const json* node : nodes) {
            if (!node->is_object()) continue;
            std::vector<std::string> members;
            for (const auto& [k, v] : node->items()) members.push_back(k);
            std::sort(members.begin(), members.end());
            bool context = node->contains("@context") && context_mentions_schema_org((*node)["@context"]);
            bool named = node->contains("url") || node->contains("name");
            if (context && named)
                return audit::make_result(id, Status::Pass,
                                          relaxed ? "schema.org JSON-LD annotations found (trailing comma ignored)"
                                                  : "schema.org JSON-LD annotations found",
                                          members);
            problems.push_back(!context ? "no @context referencing schema.org" : "neither url nor name present");
        }
    }
    if (scripts == 0)
        return audit::make_result(id, Status::Fail, "no <script type=\"application/ld+json\"> element in the page");
    return audit::make_result(id, Status::Fail, "JSON-LD script present but unusable", problems);
}

}  // namespace fairvoc::probe
