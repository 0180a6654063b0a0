#include "fairvoc/report/report.hpp"

#include <algorithm>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <sstream>

#include "fairvoc/error.hpp"

namespace fairvoc::report {

namespace {

using audit::Severity;
using audit::Status;
using json = nlohmann::ordered_json;

constexpr FairCategory kCategories[] = {FairCategory::Findable, FairCategory::Accessible,
                                        FairCategory::Interoperable, FairCategory::Reusable};

FairCategory default_category(std::string_view id) {
    if (id.starts_with("findability.") || id.starts_with("prefix.")) return FairCategory::Findable;
    if (id == "negotiation.ontology.text_turtle" || id == "negotiation.ontology.application_rdf_xml")
        return FairCategory::Interoperable;
    if (id.starts_with("uri.") || id.starts_with("negotiation.") || id == "documentation.html" ||
        id == "versioning.version_in_namespace")
        return FairCategory::Accessible;
    return FairCategory::Reusable;
}

json score_json(const std::optional<double>& s) { return s ? json(*s) : json(nullptr); }

std::optional<double> score_from(const json& j) {
    if (j.is_null()) return std::nullopt;
    if (!j.is_number()) throw InvalidConfig("report score is neither a number nor null");
    return j.get<double>();
}

const json& member(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InvalidConfig(std::string("report JSON lacks \"") + key + "\"");
    return j.at(key);
}

std::string string_member(const json& j, const char* key) {
    const auto& v = member(j, key);
    if (!v.is_string()) throw InvalidConfig(std::string("report field \"") + key + "\" is not a string");
    return v.get<std::string>();
}

std::string format_score(const std::optional<double>& s) {
    if (!s) return "n/a";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", *s);
    return buf;
}

std::string cell(std::string text) {
    std::string out;
    for (char c : text) {
        if (c == '|') out += "\\|";
        else if (c == '\n') out += ' ';
        else out += c;
    }
    return out;
}

int attention_rank(Status s) {
    switch (s) {
        case Status::Fail: return 0;
        case Status::Warn: return 1;
        default: return 2;
    }
}

}  // namespace

std::string_view to_string(FairCategory c) noexcept {
    switch (c) {
        case FairCategory::Findable: return "findable";
        case FairCategory::Accessible: return "accessible";
        case FairCategory::Interoperable: return "interoperable";
        case FairCategory::Reusable: return "reusable";
    }
    return "?";
}

std::optional<FairCategory> parse_category(std::string_view text) {
    for (auto c : kCategories)
        if (to_string(c) == text) return c;
    return std::nullopt;
}

double ScoringConfig::weight(Severity s) const {
    switch (s) {
        case Severity::Recommended: return recommended;
        case Severity::Optional: return optional;
        case Severity::Informational: return informational;
    }
    return 0.0;
}

FairCategory category_of(std::string_view id, const ScoringConfig& config) {
    const std::pair<std::string, FairCategory>* best = nullptr;
    for (const auto& o : config.overrides)
        if (id.starts_with(o.first) && (!best || o.first.size() > best->first.size())) best = &o;
    return best ? best->second : default_category(id);
}

std::optional<double> Scores::of(FairCategory c) const {
    switch (c) {
        case FairCategory::Findable: return findable;
        case FairCategory::Accessible: return accessible;
        case FairCategory::Interoperable: return interoperable;
        case FairCategory::Reusable: return reusable;
    }
    return std::nullopt;
}

std::optional<double> score(const std::vector<ReportCheck>& checks, const ScoringConfig& config) {
    double passed = 0, counted = 0;
    for (const auto& c : checks) {
        auto s = c.result.status;
        if (s != Status::Pass && s != Status::Fail && s != Status::Warn) continue;
        double w = config.weight(c.result.severity);
        counted += w;
        if (s == Status::Pass) passed += w;
    }
    if (counted <= 0) return std::nullopt;
    return 100.0 * passed / counted;
}

Report assemble_report(std::vector<audit::CheckResult> results, std::string subject, const ScoringConfig& config,
                       std::string timestamp, Environment environment) {
    Report r;
    r.subject = std::move(subject);
    r.timestamp = std::move(timestamp);
    r.environment = std::move(environment);
    for (auto& res : results) {
        auto category = category_of(res.id, config);
        r.checks.push_back({std::move(res), category});
    }
    std::stable_sort(r.checks.begin(), r.checks.end(), [](const ReportCheck& a, const ReportCheck& b) {
        return std::tie(a.category, a.result.id) < std::tie(b.category, b.result.id);
    });
    auto in = [&](FairCategory c) {
        std::vector<ReportCheck> subset;
        for (const auto& ch : r.checks)
            if (ch.category == c) subset.push_back(ch);
        return score(subset, config);
    };
    r.scores.findable = in(FairCategory::Findable);
    r.scores.accessible = in(FairCategory::Accessible);
    r.scores.interoperable = in(FairCategory::Interoperable);
    r.scores.reusable = in(FairCategory::Reusable);
    r.scores.overall = score(r.checks, config);
    return r;
}

std::optional<ReportFormat> parse_report_format(std::string_view text) {
    if (text == "json") return ReportFormat::Json;
    if (text == "md" || text == "markdown") return ReportFormat::Markdown;
    return std::nullopt;
}

std::string render_report(const Report& r, ReportFormat format) {
    if (format == ReportFormat::Json) {
        json doc;
        doc["subject"] = r.subject;
        doc["tool_version"] = r.tool_version;
        doc["timestamp"] = r.timestamp;
        json scores = json::object();
        for (auto c : kCategories) scores[std::string(to_string(c))] = score_json(r.scores.of(c));
        scores["overall"] = score_json(r.scores.overall);
        doc["scores"] = scores;
        json checks = json::array();
        for (const auto& c : r.checks) {
            json item;
            item["id"] = c.result.id;
            item["category"] = to_string(c.category);
            item["severity"] = audit::to_string(c.result.severity);
            item["status"] = audit::to_string(c.result.status);
            item["evidence"] = {{"message", c.result.evidence.message}, {"values", c.result.evidence.values}};
            item["reference"] = c.result.reference;
            checks.push_back(std::move(item));
        }
        doc["checks"] = std::move(checks);
        doc["environment"] = {{"network", r.environment.network},
                              {"cassette", r.environment.cassette.empty() ? json(nullptr)
                                                                          : json(r.environment.cassette)}};
        return doc.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "# FAIR report: " << r.subject << "\n\n";
    out << "Generated " << r.timestamp << " by fairvoc " << r.tool_version << " (network: "
        << (r.environment.network.empty() ? "unknown" : r.environment.network);
    if (!r.environment.cassette.empty()) out << ", cassette: " << r.environment.cassette;
    out << ").\n\n";
    out << "| Category | Score |\n|---|---|\n";
    for (auto c : kCategories) {
        std::string name(to_string(c));
        name[0] = static_cast<char>(name[0] - 'a' + 'A');
        out << "| " << name << " | " << format_score(r.scores.of(c)) << " |\n";
    }
    out << "| Overall | " << format_score(r.scores.overall) << " |\n\n";

    auto ordered = r.checks;
    std::stable_sort(ordered.begin(), ordered.end(), [](const ReportCheck& a, const ReportCheck& b) {
        return attention_rank(a.result.status) < attention_rank(b.result.status);
    });
    out << "| Status | Check | Category | Severity | Evidence |\n|---|---|---|---|---|\n";
    for (const auto& c : ordered) {
        out << "| " << audit::to_string(c.result.status) << " | `" << c.result.id << "` | " << to_string(c.category)
            << " | " << audit::to_string(c.result.severity) << " | " << cell(c.result.evidence.message) << " |\n";
    }
    return out.str();
}

Report report_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidConfig(std::string("report is not JSON: ") + e.what());
    }
    Report r;
    r.subject = string_member(doc, "subject");
    r.tool_version = string_member(doc, "tool_version");
    r.timestamp = string_member(doc, "timestamp");
    const auto& scores = member(doc, "scores");
    r.scores.findable = score_from(member(scores, "findable"));
    r.scores.accessible = score_from(member(scores, "accessible"));
    r.scores.interoperable = score_from(member(scores, "interoperable"));
    r.scores.reusable = score_from(member(scores, "reusable"));
    r.scores.overall = score_from(member(scores, "overall"));
    const auto& checks = member(doc, "checks");
    if (!checks.is_array()) throw InvalidConfig("report checks is not an array");
    for (const auto& item : checks) {
        ReportCheck c;
        c.result.id = string_member(item, "id");
        auto category = parse_category(string_member(item, "category"));
        auto severity = audit::parse_severity(string_member(item, "severity"));
        auto status = audit::parse_status(string_member(item, "status"));
        if (!category || !severity || !status) throw InvalidConfig("report check " + c.result.id + " has bad enums");
        c.category = *category;
        c.result.severity = *severity;
        c.result.status = *status;
        const auto& evidence = member(item, "evidence");
        c.result.evidence.message = string_member(evidence, "message");
        for (const auto& v : member(evidence, "values")) {
            if (!v.is_string()) throw InvalidConfig("evidence values must be strings");
            c.result.evidence.values.push_back(v.get<std::string>());
        }
        c.result.reference = string_member(item, "reference");
        r.checks.push_back(std::move(c));
    }
    const auto& env = member(doc, "environment");
    r.environment.network = string_member(env, "network");
    const auto& cassette = member(env, "cassette");
    if (!cassette.is_null()) r.environment.cassette = cassette.get<std::string>();
    return r;
}

int exit_code(const Report& report) {
    return std::any_of(report.checks.begin(), report.checks.end(),
                       [](const ReportCheck& c) { return audit::is_blocking(c.result); })
               ? 1
               : 0;
}

}  // namespace fairvoc::report
