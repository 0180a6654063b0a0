#include "fairvoc/probe/probe.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <set>
#include <thread>

#include "fairvoc/audit/catalog.hpp"
#include "fairvoc/error.hpp"
#include "fairvoc/rdf/iri.hpp"
#include "fairvoc/rdf/parse.hpp"

namespace fairvoc::probe {
namespace {

using audit::Status;

std::string lower(std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::string bare_media_type(std::string_view content_type) {
    auto semi = content_type.find(';');
    auto mt = content_type.substr(0, semi);
    while (!mt.empty() && std::isspace(static_cast<unsigned char>(mt.back()))) mt.remove_suffix(1);
    while (!mt.empty() && std::isspace(static_cast<unsigned char>(mt.front()))) mt.remove_prefix(1);
    return lower(mt);
}

BodyOutcome try_parse(std::string_view body, rdf::RdfFormat format, const std::string& base) {
    try {
        (void)rdf::parse_triples(body, format, base);
        return {BodyParse::ParsedAs, format, {}};
    } catch (const Error& e) {
        return {BodyParse::ParseFailed, std::nullopt, e.what()};
    }
}

BodyOutcome classify(const NegotiationTrace& trace) {
    const std::string& url = trace.final_url();
    std::string media = trace.final_media_type.value_or("");
    if (auto format = rdf::format_from_media_type(media)) return try_parse(trace.body, *format, url);
    if (looks_like_html(media, trace.body)) return {BodyParse::HtmlDetected, std::nullopt, {}};
    std::optional<rdf::RdfFormat> format;
    if (trace.request.accept) format = rdf::format_from_media_type(*trace.request.accept);
    if (!format) {
        try {
            format = rdf::detect_format(trace.body, iri::path(url));
        } catch (const Error& e) {
            return {BodyParse::ParseFailed, std::nullopt, e.what()};
        }
    }
    return try_parse(trace.body, *format, url);
}

HttpResponse send_with_retry(Transport& transport, const HttpRequest& request, const RetryPolicy& retry) {
    auto delay = retry.backoff;
    for (int attempt = 0;; ++attempt) {
        try {
            return transport.send(request);
        } catch (const TransportError& e) {
            if (!e.retryable() || attempt >= retry.retries) throw;
        }
        if (retry.sleep)
            retry.sleep(delay);
        else
            std::this_thread::sleep_for(delay);
        delay *= 2;
    }
}

std::string accept_slug(const std::optional<std::string>& accept) {
    if (!accept) return "no_accept";
    std::string out;
    for (char c : *accept) out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    return out;
}

std::string describe_hops(const NegotiationTrace& trace) {
    std::string out;
    for (const auto& hop : trace.hops) {
        if (!out.empty()) out += " -> ";
        out += std::to_string(hop.status) + " " + hop.url;
    }
    return out;
}

std::string outcome_name(const BodyOutcome& o) {
    switch (o.kind) {
        case BodyParse::NotAttempted: return "not parsed";
        case BodyParse::ParsedAs: return "parsed as " + std::string(rdf::format_name(*o.format));
        case BodyParse::ParseFailed: return "unparseable body (" + o.detail + ")";
        case BodyParse::HtmlDetected: return "HTML";
    }
    return {};
}

}  // namespace

bool NegotiationTrace::has_303() const {
    return std::any_of(hops.begin(), hops.end(), [](const Hop& h) { return h.status == 303; });
}

bool is_redirect(int status) noexcept {
    return status == 301 || status == 302 || status == 303 || status == 307 || status == 308;
}

bool looks_like_html(std::string_view media_type, std::string_view body) {
    std::string mt = bare_media_type(media_type);
    if (mt == "text/html" || mt == "application/xhtml+xml") return true;
    std::string head = lower(body.substr(0, 1024));
    return head.find("<!doctype html") != std::string::npos || head.find("<html") != std::string::npos;
}

NegotiationTrace probe(Transport& transport, const ProbeRequest& request, const RetryPolicy& retry) {
    NegotiationTrace trace;
    trace.request = request;
    std::set<std::string> seen;
    std::string url = iri::strip_fragment(request.target_iri);

    for (int redirects = 0;; ++redirects) {
        if (!seen.insert(url).second) {
            trace.failure = ProbeFailure::TooManyRedirects;
            trace.failure_detail = "redirect loop back to " + url;
            return trace;
        }
        HttpRequest http{url, {}, request.timeout};
        if (request.accept) http.headers.emplace_back("Accept", *request.accept);
        HttpResponse response;
        try {
            response = send_with_retry(transport, http, retry);
        } catch (const Timeout& e) {
            trace.hops.push_back({url, 0});
            trace.failure = ProbeFailure::Timeout;
            trace.failure_detail = e.what();
            return trace;
        } catch (const TransportError& e) {
            trace.hops.push_back({url, 0});
            trace.failure = ProbeFailure::Transport;
            trace.failure_detail = e.what();
            return trace;
        }
        trace.hops.push_back({url, response.status});
        trace.final_status = response.status;

        if (is_redirect(response.status)) {
            std::string location = response.header("Location");
            if (location.empty()) {
                trace.failure = ProbeFailure::Transport;
                trace.failure_detail = "redirect " + std::to_string(response.status) + " without Location";
                return trace;
            }
            if (redirects + 1 > request.max_redirects) {
                trace.failure = ProbeFailure::TooManyRedirects;
                trace.failure_detail = "more than " + std::to_string(request.max_redirects) + " redirects";
                return trace;
            }
            url = iri::strip_fragment(iri::resolve(url, location));
            continue;
        }

        std::string content_type = response.header("Content-Type");
        if (!content_type.empty()) trace.final_media_type = bare_media_type(content_type);
        trace.body = std::move(response.body);
        if (request.classify_body && response.status >= 200 && response.status < 300)
            trace.body_parse = classify(trace);
        return trace;
    }
}

BodyOutcome expected_outcome(const std::optional<std::string>& accept) {
    if (!accept) return {BodyParse::ParsedAs, rdf::RdfFormat::Turtle, {}};
    if (bare_media_type(*accept) == "text/html") return {BodyParse::HtmlDetected, std::nullopt, {}};
    if (auto f = rdf::format_from_media_type(*accept)) return {BodyParse::ParsedAs, f, {}};
    return {};
}

audit::CheckResult evaluate_cell(const std::string& check_id, const NegotiationTrace& trace,
                                 const MatrixOptions& options) {
    const auto& accept = trace.request.accept;
    std::string prefix = "GET " + trace.request.target_iri + " with Accept " + accept.value_or("(none)") + ": ";
    std::vector<std::string> hops{describe_hops(trace)};

    if (trace.failure != ProbeFailure::None)
        return audit::make_result(check_id, Status::Fail, prefix + trace.failure_detail, hops);

    int status = trace.final_status;
    if (status == 406 && accept && rdf::format_from_media_type(*accept) &&
        rdf::format_from_media_type(*accept) != rdf::RdfFormat::Turtle)
        return audit::make_result(check_id, Status::Info,
                                  prefix + "406 Not Acceptable; serialization not offered", hops);
    if (status < 200 || status >= 300)
        return audit::make_result(check_id, Status::Fail, prefix + "final status " + std::to_string(status),
                                  hops);

    BodyOutcome want = expected_outcome(accept);
    const BodyOutcome& got = trace.body_parse;
    if (got.kind != want.kind || got.format != want.format)
        return audit::make_result(check_id, Status::Fail,
                                  prefix + "expected " + outcome_name(want) + ", got " + outcome_name(got),
                                  hops);

    if (trace.has_303())
        return audit::make_result(check_id, Status::Pass, prefix + "303 redirect to " + outcome_name(got), hops);
    for (const auto& hop : trace.hops)
        if (is_redirect(hop.status))
            return audit::make_result(check_id, Status::Warn,
                                      prefix + "reached via " + std::to_string(hop.status) +
                                          " instead of 303 See Other",
                                      hops);
    return audit::make_result(check_id, options.direct_200,
                              prefix + "served directly with " + std::to_string(status) + ", no 303 redirect",
                              hops);
}

std::vector<MatrixCell> negotiation_cells(const std::string& ontology_iri,
                                          const std::vector<std::string>& version_iris) {
    std::vector<MatrixCell> cells;
    for (std::optional<std::string> accept :
         {std::optional<std::string>("text/html"), std::optional<std::string>("text/turtle"),
          std::optional<std::string>("application/rdf+xml"), std::optional<std::string>()}) {
        cells.push_back({"negotiation.ontology." + accept_slug(accept), ontology_iri, accept});
    }
    std::set<std::string> unique(version_iris.begin(), version_iris.end());
    for (const auto& v : unique)
        for (const char* accept : {"text/html", "text/turtle"})
            cells.push_back({"negotiation.version." + v + "." + accept_slug(std::string(accept)), v,
                             std::string(accept)});
    return cells;
}

MatrixRun run_negotiation_matrix(Transport& transport, const std::string& ontology_iri,
                                 const std::vector<std::string>& version_iris, const MatrixOptions& options) {
    auto cells = negotiation_cells(ontology_iri, version_iris);
    MatrixRun run;
    run.traces.resize(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < cells.size();) {
            ProbeRequest req{cells[i].target, cells[i].accept, options.max_redirects, options.timeout, true};
            run.traces[i] = probe(transport, req, options.retry);
        }
    };
    std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(options.concurrency, 1)), 1,
                                                   cells.size());
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (std::size_t i = 0; i < cells.size(); ++i)
        run.results.push_back(evaluate_cell(cells[i].check_id, run.traces[i], options));
    return run;
}

std::vector<audit::CheckResult> check_negotiation_matrix(Transport& transport, const std::string& ontology_iri,
                                                         const std::vector<std::string>& version_iris,
                                                         const MatrixOptions& options) {
    return run_negotiation_matrix(transport, ontology_iri, version_iris, options).results;
}

audit::CheckResult check_documentation(const NegotiationTrace& trace) {
    if (trace.failure == ProbeFailure::None && trace.final_status == 200 &&
        looks_like_html(trace.final_media_type.value_or(""), trace.body))
        return audit::make_result("documentation.html", Status::Pass,
                                  "HTML documentation served at " + trace.final_url(), {trace.final_url()});
    std::string why = trace.failure != ProbeFailure::None ? trace.failure_detail
                                                          : "final status " + std::to_string(trace.final_status) +
                                                                " without an HTML page";
    return audit::make_result("documentation.html", Status::Fail,
                              "no HTML documentation for " + trace.request.target_iri + ": " + why,
                              {describe_hops(trace)});
}

}  // namespace fairvoc::probe
