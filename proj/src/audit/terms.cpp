#include "fairvoc/audit/terms.hpp"

#include <cstdio>
#include <set>

#include "fairvoc/audit/catalog.hpp"
#include "fairvoc/rdf/vocab.hpp"

namespace fairvoc::audit {

namespace {

std::string percent(double fraction) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f%%", fraction * 100.0);
    return buf;
}

double ratio(std::size_t part, std::size_t total) {
    return total == 0 ? 1.0 : static_cast<double>(part) / static_cast<double>(total);
}

}  // namespace

const std::vector<std::string>& term_properties() {
    static const std::vector<std::string> kProps{
        std::string(vocab::kRdfsLabel),
        std::string(vocab::kRdfsComment),
        std::string(vocab::kVann) + "example",
        std::string(vocab::kSw) + "term_status",
        std::string(vocab::kVaem) + "rationale",
        std::string(vocab::kDcterms) + "source",
    };
    return kProps;
}

TermCoverage check_term_annotations(const rdf::OntologyModel& model) {
    TermCoverage cov;
    for (const auto& p : term_properties()) cov.present[p] = 0;
    for (const auto& term : model.declared_terms()) {
        ++cov.total;
        for (auto kind : term.kinds) ++cov.per_kind[kind];
        TermGap gap{term.iri, {}, {}};
        for (const auto& p : term_properties()) {
            if (term.has_annotation(p))
                ++cov.present[p];
            else
                gap.missing.push_back(p);
        }
        std::set<std::string> langs;
        auto [lo, hi] = term.annotations.equal_range(std::string(vocab::kRdfsLabel));
        for (auto it = lo; it != hi; ++it) langs.insert(it->second.language);
        gap.label_languages.assign(langs.begin(), langs.end());
        if (term.has_annotation(vocab::kRdfsLabel)) ++cov.labeled;
        if (term.has_annotation(vocab::kRdfsComment)) ++cov.defined;
        cov.terms.push_back(std::move(gap));
    }
    cov.labeled_fraction = ratio(cov.labeled, cov.total);
    cov.defined_fraction = ratio(cov.defined, cov.total);
    return cov;
}

std::vector<CheckResult> check_term_coverage(const TermCoverage& cov,
                                             const CoverageThresholds& thresholds) {
    static const std::vector<std::string> kIds{"terms.label",  "terms.comment",  "terms.example",
                                               "terms.status", "terms.rationale", "terms.source"};
    std::vector<CheckResult> out;
    const auto& props = term_properties();
    for (std::size_t i = 0; i < props.size(); ++i) {
        const std::string& p = props[i];
        auto found = cov.present.find(p);
        std::size_t have = i == 0 ? cov.labeled
                           : i == 1 ? cov.defined
                                    : (found == cov.present.end() ? 0 : found->second);
        double fraction = ratio(have, cov.total);
        std::vector<std::string> lacking;
        for (const auto& gap : cov.terms)
            for (const auto& m : gap.missing)
                if (m == p) lacking.push_back(gap.iri);
        std::string message = std::to_string(have) + "/" + std::to_string(cov.total) +
                              " terms carry <" + p + "> (" + percent(fraction) + ")";
        Status status;
        if (i < 2) {
            status = fraction >= thresholds.pass   ? Status::Pass
                     : fraction >= thresholds.warn ? Status::Warn
                                                   : Status::Fail;
        } else {
            status = cov.total > 0 && have == cov.total ? Status::Pass : Status::Info;
        }
        out.push_back(make_result(kIds[i], status, message, lacking));
    }
    return out;
}

}  // namespace fairvoc::audit
