#pragma once

#include <string>
#include <string_view>

#include "fairvoc/audit/audit.hpp"
#include "fairvoc/probe/findability.hpp"
#include "fairvoc/probe/probe.hpp"
#include "fairvoc/report/report.hpp"

namespace fairvoc::report {

/// Settings read from the `key = value` config file.
struct ToolConfig {
    ScoringConfig scoring;
    audit::AuditOptions audit;
    probe::RegistryEndpoints registries;
    probe::MatrixOptions matrix;
};

/// Keys: weight.{recommended,optional,informational}, threshold.terms.{pass,warn},
/// registry.{prefixcc,lov}, probe.{concurrency,max_redirects,retries,timeout,direct_200},
/// category.<check-id prefix>, alias.<metadata key>. Throws InvalidConfig.
ToolConfig parse_tool_config(std::string_view text);

/// True for http(s) IRIs, false for local paths.
bool is_web_input(std::string_view input);

/// Reads a local file, or dereferences an IRI through `transport` asking for
/// Turtle, then RDF/XML, then anything. Throws on I/O, transport or parse errors.
rdf::OntologyModel load_ontology(const std::string& input, probe::Transport* transport,
                                 const probe::MatrixOptions& options = {});

struct CheckOptions {
    ToolConfig config;
    /// Null means offline: every web check is reported as Skipped.
    probe::Transport* transport = nullptr;
    probe::Clock clock = probe::utc_now;
    Environment environment;
};

/// Version IRIs probed for a model: owl:versionIRI and owl:priorVersion values.
std::vector<std::string> probed_versions(const rdf::OntologyModel& model);

/// Model checks plus, when a transport is given, negotiation, documentation
/// and registry checks.
std::vector<audit::CheckResult> run_checks(const rdf::OntologyModel& model, const CheckOptions& options);

Report run_check(const std::string& input, const CheckOptions& options);

}  // namespace fairvoc::report
