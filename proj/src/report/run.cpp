#include "fairvoc/report/run.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "fairvoc/audit/catalog.hpp"
#include "fairvoc/error.hpp"
#include "fairvoc/rdf/parse.hpp"
#include "fairvoc/rdf/vocab.hpp"

namespace fairvoc::report {

namespace {

using audit::CheckResult;
using audit::MetadataField;
using audit::Status;

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

double number(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw InvalidConfig(key + ": '" + value + "' is not a number");
    }
}

int integer(const std::string& key, const std::string& value, int min) {
    double v = number(key, value);
    if (v != static_cast<int>(v) || v < min)
        throw InvalidConfig(key + " must be an integer of at least " + std::to_string(min));
    return static_cast<int>(v);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CheckResult skipped(const std::string& id, const std::string& why) {
    return audit::make_result(id, Status::Skipped, why);
}

}  // namespace

ToolConfig parse_tool_config(std::string_view text) {
    ToolConfig c;
    std::istringstream in{std::string(text)};
    int line_no = 0;
    for (std::string raw; std::getline(in, raw);) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw InvalidConfig("config line " + std::to_string(line_no) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));

        if (key == "weight.recommended" || key == "weight.optional" || key == "weight.informational") {
            double w = number(key, value);
            if (w < 0) throw InvalidConfig(key + " must not be negative");
            (key == "weight.recommended" ? c.scoring.recommended
             : key == "weight.optional"  ? c.scoring.optional
                                         : c.scoring.informational) = w;
        } else if (key == "threshold.terms.pass" || key == "threshold.terms.warn") {
            double v = number(key, value);
            if (v < 0 || v > 1) throw InvalidConfig(key + " must lie in [0, 1]");
            (key == "threshold.terms.pass" ? c.audit.thresholds.pass : c.audit.thresholds.warn) = v;
        } else if (key == "registry.prefixcc") {
            c.registries.prefixcc = value;
        } else if (key == "registry.lov") {
            c.registries.lov = value;
        } else if (key == "probe.concurrency") {
            c.matrix.concurrency = integer(key, value, 1);
        } else if (key == "probe.max_redirects") {
            c.matrix.max_redirects = integer(key, value, 0);
        } else if (key == "probe.retries") {
            c.matrix.retry.retries = integer(key, value, 0);
        } else if (key == "probe.timeout") {
            double secs = number(key, value);
            if (secs <= 0) throw InvalidConfig("probe.timeout must be positive");
            c.matrix.timeout = std::chrono::milliseconds(static_cast<long long>(secs * 1000));
        } else if (key == "probe.direct_200") {
            auto s = audit::parse_status(value);
            if (!s || *s == Status::Skipped) throw InvalidConfig("probe.direct_200: unknown status '" + value + "'");
            c.matrix.direct_200 = *s;
        } else if (key.starts_with("category.")) {
            auto cat = parse_category(value);
            if (!cat) throw InvalidConfig(key + ": unknown category '" + value + "'");
            c.scoring.overrides.emplace_back(key.substr(9), *cat);
        } else if (key.starts_with("alias.")) {
            std::string field_key = key.substr(6);
            auto fields = audit::metadata_fields();
            auto it = std::find_if(fields.begin(), fields.end(),
                                   [&](const audit::FieldSpec& f) { return f.key == field_key; });
            if (it == fields.end()) throw InvalidConfig(key + ": unknown metadata field");
            std::istringstream items(value);
            for (std::string iri; std::getline(items, iri, ',');)
                if (auto t = trim(iri); !t.empty()) c.audit.aliases[it->field].push_back(t);
        } else {
            throw InvalidConfig("unknown config key '" + key + "'");
        }
    }
    if (c.audit.thresholds.warn > c.audit.thresholds.pass)
        throw InvalidConfig("threshold.terms.warn exceeds threshold.terms.pass");
    return c;
}

bool is_web_input(std::string_view input) {
    return input.starts_with("http://") || input.starts_with("https://");
}

rdf::OntologyModel load_ontology(const std::string& input, probe::Transport* transport,
                                 const probe::MatrixOptions& options) {
    if (!is_web_input(input)) {
        std::string bytes = read_file(input);
        auto dot = input.rfind('.');
        std::optional<std::string_view> hint;
        if (dot != std::string::npos) hint = std::string_view(input).substr(dot + 1);
        std::string base = "file://" + std::filesystem::absolute(input).lexically_normal().generic_string();
        return rdf::parse_ontology(bytes, rdf::detect_format(bytes, hint), base);
    }
    if (!transport) throw Error("cannot dereference " + input + " offline without a cassette");
    std::string problems;
    for (std::optional<std::string> accept :
         {std::optional<std::string>("text/turtle"), std::optional<std::string>("application/rdf+xml"),
          std::optional<std::string>()}) {
        probe::ProbeRequest req;
        req.target_iri = input;
        req.accept = accept;
        req.max_redirects = options.max_redirects;
        req.timeout = options.timeout;
        auto trace = probe::probe(*transport, req, options.retry);
        if (trace.body_parse.kind == probe::BodyParse::ParsedAs && trace.body_parse.format)
            return rdf::parse_ontology(trace.body, *trace.body_parse.format, trace.final_url());
        problems += "; " + accept.value_or("no Accept") + ": " +
                    (trace.failure_detail.empty() ? "status " + std::to_string(trace.final_status)
                                                  : trace.failure_detail);
    }
    throw Error("no RDF representation retrieved for " + input + problems);
}

std::vector<std::string> probed_versions(const rdf::OntologyModel& model) {
    std::set<std::string> out;
    auto subject = rdf::Term::iri(model.ontology_iri());
    for (auto p : {vocab::kOwlVersionIri, vocab::kOwlPriorVersion})
        for (const auto& v : model.objects(subject, p))
            if (v.is_iri() && v.value != model.ontology_iri()) out.insert(v.value);
    return {out.begin(), out.end()};
}

std::vector<CheckResult> run_checks(const rdf::OntologyModel& model, const CheckOptions& options) {
    const auto& cfg = options.config;
    auto results = audit::audit_model(model, cfg.audit);
    const std::string& iri = model.ontology_iri();
    auto versions = probed_versions(model);

    if (!options.transport) {
        const std::string why = "offline: no network access and no cassette";
        for (const auto& cell : probe::negotiation_cells(iri, versions)) results.push_back(skipped(cell.check_id, why));
        for (const char* id : {"documentation.html", "findability.prefix_registry", "findability.lov_registry",
                               "findability.jsonld_annotations"})
            results.push_back(skipped(id, why));
        return results;
    }

    auto& transport = *options.transport;
    auto run = probe::run_negotiation_matrix(transport, iri, versions, cfg.matrix);
    const probe::NegotiationTrace* html = nullptr;
    for (std::size_t i = 0; i < run.results.size(); ++i) {
        if (run.results[i].id == "negotiation.ontology.text_html") html = &run.traces[i];
        results.push_back(run.results[i]);
    }
    if (html) {
        results.push_back(probe::check_documentation(*html));
        if (html->body_parse.kind == probe::BodyParse::HtmlDetected)
            results.push_back(probe::detect_jsonld_annotations(html->body));
        else
            results.push_back(audit::make_result("findability.jsonld_annotations", Status::Fail,
                                                 "no HTML documentation page was retrieved to inspect"));
    }

    auto meta = audit::extract_metadata(model, cfg.audit.aliases);
    std::string prefix = meta.first(MetadataField::Prefix);
    std::string ns = meta.first(MetadataField::NamespaceUri);
    if (ns.empty()) ns = iri;
    if (prefix.empty()) {
        results.push_back(audit::make_result("findability.prefix_registry", Status::Info,
                                             "no vann:preferredNamespacePrefix declared, nothing to look up"));
    } else {
        auto finding = probe::lookup_prefix(transport, prefix, cfg.registries, options.clock, cfg.matrix.retry);
        results.push_back(probe::check_prefix_registry(finding, ns));
    }
    auto lov = probe::lookup_lov(transport, ns, cfg.registries, options.clock, cfg.matrix.retry);
    results.push_back(probe::check_lov_registry(lov));
    return results;
}

Report run_check(const std::string& input, const CheckOptions& options) {
    auto model = load_ontology(input, options.transport, options.config.matrix);
    auto results = run_checks(model, options);
    return assemble_report(std::move(results), model.ontology_iri(), options.config.scoring, options.clock(),
                           options.environment);
}

}  // namespace fairvoc::report
