#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "fairvoc/error.hpp"
#include "fairvoc/probe/transport.hpp"
#include "fairvoc/rdf/iri.hpp"

namespace fairvoc::probe {
namespace {

class HttpTransport : public Transport {
  public:
    HttpResponse send(const HttpRequest& request) override {
        std::string_view url = request.url;
        auto scheme_end = url.find("://");
        if (scheme_end == std::string_view::npos) throw TransportError("unsupported URL " + request.url, false);
        std::string scheme(url.substr(0, scheme_end));
        if (scheme != "http" && scheme != "https")
            throw TransportError("unsupported scheme in " + request.url, false);
        auto path_start = url.find_first_of("/?", scheme_end + 3);
        std::string origin(url.substr(0, path_start));
        std::string target = path_start == std::string_view::npos ? "/" : std::string(url.substr(path_start));
        if (target.front() == '?') target.insert(target.begin(), '/');

        httplib::Client client(origin);
        auto secs = std::chrono::duration_cast<std::chrono::microseconds>(request.timeout);
        client.set_connection_timeout(secs);
        client.set_read_timeout(secs);
        client.set_write_timeout(secs);
        client.set_follow_location(false);

        httplib::Headers headers;
        for (const auto& [k, v] : request.headers) headers.emplace(k, v);
        auto result = client.Get(target, headers);
        if (!result) {
            auto err = result.error();
            if (err == httplib::Error::ConnectionTimeout) throw Timeout(request.url);
            // Read also covers read timeouts, which httplib does not distinguish
            bool retryable = err == httplib::Error::Connection || err == httplib::Error::Read ||
                             err == httplib::Error::Write;
            throw TransportError(request.url + ": " + httplib::to_string(err), retryable);
        }
        HttpResponse response;
        response.status = result->status;
        for (const auto& [k, v] : result->headers) response.headers.emplace_back(k, v);
        response.body = result->body;
        return response;
    }
};

}  // namespace

std::unique_ptr<Transport> make_http_transport() { return std::make_unique<HttpTransport>(); }

}  // namespace fairvoc::probe
