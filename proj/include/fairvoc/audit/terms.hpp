#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "fairvoc/audit/check.hpp"
#include "fairvoc/rdf/model.hpp"

namespace fairvoc::audit {

struct TermGap {
    std::string iri;
    std::vector<std::string> missing;          // annotation property IRIs absent on the term
    std::vector<std::string> label_languages;  // "" for untagged labels
};

struct TermCoverage {
    std::map<rdf::TermKind, std::size_t> per_kind;
    std::size_t total = 0;
    std::size_t labeled = 0;
    std::size_t defined = 0;
    double labeled_fraction = 1.0;
    double defined_fraction = 1.0;
    /// Number of terms carrying each term-level property.
    std::map<std::string, std::size_t> present;
    std::vector<TermGap> terms;
};

/// The six term-level properties, label and comment first.
const std::vector<std::string>& term_properties();

TermCoverage check_term_annotations(const rdf::OntologyModel& model);

struct CoverageThresholds {
    double pass = 1.0;  // label/comment fraction needed for Pass
    double warn = 0.8;  // below pass but at least this is Warn, else Fail
};

std::vector<CheckResult> check_term_coverage(const TermCoverage& coverage,
                                             const CoverageThresholds& thresholds = {});

}  // namespace fairvoc::audit
