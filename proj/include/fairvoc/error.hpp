#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fairvoc {

/// Base of every typed failure raised by the toolkit.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class UndetectableFormat : public Error {
  public:
    UndetectableFormat() : Error("cannot determine RDF serialization format") {}
};

class UnsupportedFormat : public Error {
  public:
    using Error::Error;
};

class InputTooLarge : public Error {
  public:
    explicit InputTooLarge(std::size_t size)
        : Error("input of " + std::to_string(size) + " bytes exceeds the 64 MiB limit") {}
};

/// Syntax error with a 1-based position. line/column are 0 when the
/// serialization carries no usable position.
class SyntaxError : public Error {
  public:
    SyntaxError(const std::string& what, std::size_t line, std::size_t column)
        : Error(line ? what + " at line " + std::to_string(line) + ", column " + std::to_string(column)
                     : what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

class NoOntologyDeclaration : public Error {
  public:
    explicit NoOntologyDeclaration(const std::string& detail = "no subject is typed owl:Ontology")
        : Error(detail) {}
};

class MultipleOntologyDeclarations : public Error {
  public:
    explicit MultipleOntologyDeclarations(std::size_t count)
        : Error(std::to_string(count) + " subjects are typed owl:Ontology") {}
};

class MalformedVersion : public Error {
  public:
    explicit MalformedVersion(const std::string& text)
        : Error("'" + text + "' is not a semantic version X.Y.Z") {}
};

class InvalidIri : public Error {
  public:
    explicit InvalidIri(const std::string& iri) : Error("'" + iri + "' is not an absolute IRI") {}
};

class InvalidConfig : public Error {
  public:
    using Error::Error;
};

class MissingTitle : public Error {
  public:
    MissingTitle() : Error("ontology metadata has no dcterms:title") {}
};

class VersionInNamespace : public Error {
  public:
    explicit VersionInNamespace(const std::string& iri)
        : Error("ontology IRI '" + iri + "' already embeds a version segment") {}
};

class DanglingEdge : public Error {
  public:
    explicit DanglingEdge(const std::string& endpoint)
        : Error("edge references unknown endpoint '" + endpoint + "'") {}
};

/// Failure to complete one HTTP exchange. Retryable failures (connection
/// refused, reset, timeout) may succeed on a later attempt.
class TransportError : public Error {
  public:
    TransportError(const std::string& what, bool retryable) : Error(what), retryable_(retryable) {}
    bool retryable() const noexcept { return retryable_; }

  private:
    bool retryable_;
};

class Timeout : public TransportError {
  public:
    explicit Timeout(const std::string& url) : TransportError("timed out requesting " + url, true) {}
};

}  // namespace fairvoc
