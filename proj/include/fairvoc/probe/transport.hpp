#pragma once

#include <atomic>
#include <chrono>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fairvoc::probe {

using Headers = std::vector<std::pair<std::string, std::string>>;

/// Case-insensitive header lookup; empty when absent.
std::string header_value(const Headers& headers, std::string_view name);

struct HttpRequest {
    std::string url;
    Headers headers;
    std::chrono::milliseconds timeout{30000};

    std::optional<std::string> accept() const;
};

struct HttpResponse {
    int status = 0;
    Headers headers;
    std::string body;

    std::string header(std::string_view name) const { return header_value(headers, name); }
};

/// One GET exchange without following redirects. Implementations must be
/// safe to call from several threads at once and report failures by
/// throwing TransportError (or Timeout).
class Transport {
  public:
    virtual ~Transport() = default;
    virtual HttpResponse send(const HttpRequest& request) = 0;
};

/// Real HTTP/HTTPS client.
std::unique_ptr<Transport> make_http_transport();

/// File name (without directory) of the cassette holding the exchange for
/// `url` requested with `accept` (nullopt = no Accept header).
std::string cassette_name(std::string_view url, const std::optional<std::string>& accept);

/// Replays recorded exchanges from a directory. Never touches the network;
/// a request with no recording fails with a non-retryable TransportError.
class CassetteTransport : public Transport {
  public:
    explicit CassetteTransport(std::filesystem::path dir);
    HttpResponse send(const HttpRequest& request) override;

  private:
    std::filesystem::path dir_;
};

/// Forwards to another transport and writes every completed exchange to a
/// cassette directory.
class RecordingTransport : public Transport {
  public:
    RecordingTransport(Transport& inner, std::filesystem::path dir);
    HttpResponse send(const HttpRequest& request) override;

  private:
    Transport& inner_;
    std::filesystem::path dir_;
};

/// Serialized cassette document for one exchange.
std::string write_cassette(const HttpRequest& request, const HttpResponse& response);
/// Inverse of write_cassette; throws Error on malformed documents.
std::pair<HttpRequest, HttpResponse> read_cassette(std::string_view text);

/// Refuses every request and counts attempts. Used to prove offline runs
/// never try to reach the network.
class RefusingTransport : public Transport {
  public:
    HttpResponse send(const HttpRequest& request) override;
    int attempts() const noexcept { return attempts_.load(); }

  private:
    std::atomic<int> attempts_{0};
};

}  // namespace fairvoc::probe
