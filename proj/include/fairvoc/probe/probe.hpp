#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fairvoc/audit/check.hpp"
#include "fairvoc/probe/transport.hpp"
#include "fairvoc/rdf/term.hpp"

namespace fairvoc::probe {

struct ProbeRequest {
    std::string target_iri;
    std::optional<std::string> accept;  // nullopt sends no Accept header
    int max_redirects = 10;
    std::chrono::milliseconds timeout{30000};
    bool classify_body = true;
};

enum class BodyParse { NotAttempted, ParsedAs, ParseFailed, HtmlDetected };

struct BodyOutcome {
    BodyParse kind = BodyParse::NotAttempted;
    std::optional<rdf::RdfFormat> format;  // set for ParsedAs
    std::string detail;                    // parse error text for ParseFailed
};

enum class ProbeFailure { None, Timeout, TooManyRedirects, Transport };

struct Hop {
    std::string url;
    int status = 0;  // 0 when the request never got a response
};

struct NegotiationTrace {
    ProbeRequest request;
    std::vector<Hop> hops;
    int final_status = 0;
    std::optional<std::string> final_media_type;
    BodyOutcome body_parse;
    std::string body;  // body of the final response
    ProbeFailure failure = ProbeFailure::None;
    std::string failure_detail;

    const std::string& final_url() const { return hops.back().url; }
    bool has_303() const;
};

struct RetryPolicy {
    int retries = 2;
    std::chrono::milliseconds backoff{250};  // doubled after every attempt
    std::function<void(std::chrono::milliseconds)> sleep;  // defaults to this_thread::sleep_for
};

bool is_redirect(int status) noexcept;

/// True for text/html media types or bodies that open like an HTML page.
bool looks_like_html(std::string_view media_type, std::string_view body);

/// Follows redirects by hand so every hop is recorded. Transport failures,
/// timeouts and redirect loops end the trace instead of throwing.
NegotiationTrace probe(Transport& transport, const ProbeRequest& request,
                       const RetryPolicy& retry = {});

/// The body classification a correct server yields for `accept`.
BodyOutcome expected_outcome(const std::optional<std::string>& accept);

struct MatrixOptions {
    int concurrency = 4;
    int max_redirects = 10;
    std::chrono::milliseconds timeout{30000};
    RetryPolicy retry;
    audit::Status direct_200 = audit::Status::Warn;
};

/// Grades one trace as a negotiation cell.
audit::CheckResult evaluate_cell(const std::string& check_id, const NegotiationTrace& trace,
                                 const MatrixOptions& options = {});

struct MatrixCell {
    std::string check_id;
    std::string target;
    std::optional<std::string> accept;
};

/// The cells probed for an ontology IRI and its version IRIs.
std::vector<MatrixCell> negotiation_cells(const std::string& ontology_iri,
                                          const std::vector<std::string>& version_iris);

struct MatrixRun {
    std::vector<audit::CheckResult> results;  // in cell order
    std::vector<NegotiationTrace> traces;     // parallel to results
};

/// Probes every cell, at most `options.concurrency` at a time.
MatrixRun run_negotiation_matrix(Transport& transport, const std::string& ontology_iri,
                                 const std::vector<std::string>& version_iris,
                                 const MatrixOptions& options = {});

std::vector<audit::CheckResult> check_negotiation_matrix(Transport& transport,
                                                         const std::string& ontology_iri,
                                                         const std::vector<std::string>& version_iris,
                                                         const MatrixOptions& options = {});

/// Human-readable HTML reachable for the ontology IRI (taken from the
/// text/html cell's trace).
audit::CheckResult check_documentation(const NegotiationTrace& html_trace);

}  // namespace fairvoc::probe
