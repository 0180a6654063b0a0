#pragma once

#include <string>
#include <string_view>

// Minimal RFC 3986 helpers. IRIs are handled as opaque UTF-8 strings; only
// ASCII delimiters are interpreted.
namespace fairvoc::iri {

/// True when `text` has a scheme followed by ':' (e.g. "https:").
bool is_absolute(std::string_view text) noexcept;

/// Reference resolution against an absolute base (RFC 3986 section 5.2).
/// An empty base returns `reference` unchanged.
std::string resolve(std::string_view base, std::string_view reference);

/// Lower-cased host component, or empty when there is no authority.
std::string host(std::string_view iri);

/// Path component (may be empty).
std::string path(std::string_view iri);

std::string strip_fragment(std::string_view iri);

/// Removes one trailing '#' or '/' if present.
std::string strip_terminator(std::string_view iri);

/// Portion after the last '#', '/' or ':'; the whole string if none.
std::string local_name(std::string_view iri);

}  // namespace fairvoc::iri
