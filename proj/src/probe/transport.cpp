#include "fairvoc/probe/transport.hpp"

#include <openssl/evp.h>
#include <openssl/sha.h>

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "fairvoc/error.hpp"

namespace fairvoc::probe {
namespace {

bool iequals(std::string_view a, std::string_view b) {
    return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](char x, char y) {
        return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
    });
}

std::string base64_encode(std::string_view bytes) {
    std::string out(4 * ((bytes.size() + 2) / 3), '\0');
    int n = EVP_EncodeBlock(reinterpret_cast<unsigned char*>(out.data()),
                            reinterpret_cast<const unsigned char*>(bytes.data()),
                            static_cast<int>(bytes.size()));
    out.resize(static_cast<std::size_t>(n));
    return out;
}

std::string base64_decode(std::string_view text) {
    if (text.size() % 4 != 0) throw Error("cassette body is not valid base64");
    std::string out(3 * text.size() / 4, '\0');
    int n = EVP_DecodeBlock(reinterpret_cast<unsigned char*>(out.data()),
                            reinterpret_cast<const unsigned char*>(text.data()),
                            static_cast<int>(text.size()));
    if (n < 0) throw Error("cassette body is not valid base64");
    // EVP_DecodeBlock counts padding bytes as output
    std::size_t size = static_cast<std::size_t>(n);
    if (!text.empty() && text.back() == '=') --size;
    if (text.size() > 1 && text[text.size() - 2] == '=') --size;
    out.resize(size);
    return out;
}

nlohmann::ordered_json headers_json(const Headers& headers) {
    auto sorted = headers;
    std::sort(sorted.begin(), sorted.end());
    auto obj = nlohmann::ordered_json::object();
    for (const auto& [k, v] : sorted) obj[k] = v;
    return obj;
}

Headers headers_from(const nlohmann::json& obj) {
    Headers out;
    if (!obj.is_object()) return out;
    for (const auto& [k, v] : obj.items()) out.emplace_back(k, v.get<std::string>());
    return out;
}

}  // namespace

std::string header_value(const Headers& headers, std::string_view name) {
    for (const auto& [k, v] : headers)
        if (iequals(k, name)) return v;
    return {};
}

std::optional<std::string> HttpRequest::accept() const {
    for (const auto& [k, v] : headers)
        if (iequals(k, "accept")) return v;
    return std::nullopt;
}

std::string cassette_name(std::string_view url, const std::optional<std::string>& accept) {
    std::string key(url);
    key += '\n';
    key += accept ? *accept : std::string("-");
    unsigned char digest[SHA256_DIGEST_LENGTH];
    SHA256(reinterpret_cast<const unsigned char*>(key.data()), key.size(), digest);
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned char c : digest) {
        out += hex[c >> 4];
        out += hex[c & 15];
    }
    return out + ".json";
}

std::string write_cassette(const HttpRequest& request, const HttpResponse& response) {
    nlohmann::ordered_json doc;
    doc["request"]["url"] = request.url;
    doc["request"]["headers"] = headers_json(request.headers);
    doc["response"]["status"] = response.status;
    doc["response"]["headers"] = headers_json(response.headers);
    doc["response"]["body-base64"] = base64_encode(response.body);
    return doc.dump(2) + "\n";
}

std::pair<HttpRequest, HttpResponse> read_cassette(std::string_view text) {
    try {
        auto doc = nlohmann::json::parse(text);
        HttpRequest req;
        req.url = doc.at("request").at("url").get<std::string>();
        req.headers = headers_from(doc.at("request").value("headers", nlohmann::json::object()));
        HttpResponse res;
        res.status = doc.at("response").at("status").get<int>();
        res.headers = headers_from(doc.at("response").value("headers", nlohmann::json::object()));
        res.body = base64_decode(doc.at("response").at("body-base64").get<std::string>());
        return {std::move(req), std::move(res)};
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed cassette: ") + e.what());
    }
}

CassetteTransport::CassetteTransport(std::filesystem::path dir) : dir_(std::move(dir)) {}

HttpResponse CassetteTransport::send(const HttpRequest& request) {
    auto path = dir_ / cassette_name(request.url, request.accept());
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw TransportError("no recorded exchange for " + request.url + " (Accept: " +
                                 request.accept().value_or("none") + ")",
                             false);
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_cassette(buf.str()).second;
}

RecordingTransport::RecordingTransport(Transport& inner, std::filesystem::path dir)
    : inner_(inner), dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

HttpResponse RecordingTransport::send(const HttpRequest& request) {
    HttpResponse response = inner_.send(request);
    HttpRequest stored = request;
    stored.headers.clear();
    if (auto accept = request.accept()) stored.headers.emplace_back("Accept", *accept);
    std::ofstream out(dir_ / cassette_name(request.url, request.accept()), std::ios::binary);
    out << write_cassette(stored, response);
    if (!out) throw Error("cannot write cassette in " + dir_.string());
    return response;
}

HttpResponse RefusingTransport::send(const HttpRequest& request) {
    ++attempts_;
    throw TransportError("network access disabled (" + request.url + ")", false);
}

}  // namespace fairvoc::probe
