#include <algorithm>
#include <random>
#include <regex>
#include <set>
#include <sstream>

#include "doctest.h"
#include "fairvoc/audit/audit.hpp"
#include "fairvoc/audit/catalog.hpp"
#include "fairvoc/audit/metadata.hpp"
#include "fairvoc/audit/terms.hpp"
#include "fairvoc/audit/uri.hpp"
#include "fairvoc/audit/versioning.hpp"
#include "fairvoc/error.hpp"
#include "fairvoc/rdf/iri.hpp"
#include "fairvoc/rdf/parse.hpp"
#include "fixtures.hpp"

using namespace fairvoc;
using namespace fairvoc::audit;
using fairvoc::testing::read_fixture;

namespace {

const char* kPrefixes = R"(
@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
@prefix owl: <http://www.w3.org/2002/07/owl#> .
@prefix dcterms: <http://purl.org/dc/terms/> .
@prefix foaf: <http://xmlns.com/foaf/0.1/> .
@prefix vann: <http://purl.org/vocab/vann/> .
@prefix schema: <https://schema.org/> .
)";

rdf::OntologyModel model_of(const std::string& turtle) {
    return rdf::parse_ontology(std::string(kPrefixes) + turtle, rdf::RdfFormat::Turtle);
}

rdf::OntologyModel full_model() {
    return rdf::parse_ontology(read_fixture("example/ontology.ttl"), rdf::RdfFormat::Turtle);
}

// The full fixture with every line mentioning `needle` dropped.
std::string full_without(std::string_view needle) {
    std::istringstream in(read_fixture("example/ontology.ttl"));
    std::string line, out;
    while (std::getline(in, line))
        if (line.find(needle) == std::string::npos) out += line + "\n";
    return out;
}

std::map<Status, int> tally(const std::vector<CheckResult>& results) {
    std::map<Status, int> t;
    for (const auto& r : results) ++t[r.status];
    return t;
}

const CheckResult& by_id(const std::vector<CheckResult>& results, std::string_view id) {
    auto it = std::find_if(results.begin(), results.end(), [&](const auto& r) { return r.id == id; });
    REQUIRE_MESSAGE(it != results.end(), "missing check " << id);
    return *it;
}

}  // namespace

TEST_CASE("extract_metadata on the versioning listing") {
    auto model = rdf::parse_ontology(read_fixture("example/listing.ttl"), rdf::RdfFormat::Turtle);
    auto meta = extract_metadata(model);
    CHECK(meta.first(MetadataField::VersionIri) == "https://w3id.org/example/1.0.0");
    CHECK(meta.first(MetadataField::VersionInfo) == "1.0.0");
}

TEST_CASE("extract_metadata with no annotations") {
    auto meta = extract_metadata(model_of("<https://w3id.org/x> a owl:Ontology ."));
    for (const auto& values : meta.fields) CHECK(values.empty());
    CHECK(meta.unmapped_annotations == 0);
}

TEST_CASE("extract_metadata populates all 24 fields of the full fixture") {
    auto model = full_model();
    auto meta = extract_metadata(model);
    // oracle: number of triples per predicate on the ontology IRI
    std::map<std::string, std::size_t> per_predicate;
    for (const auto& t : model.about(rdf::Term::iri(model.ontology_iri()))) ++per_predicate[t.predicate.value];
    for (const auto& spec : metadata_fields()) {
        CAPTURE(spec.key);
        CHECK(meta.get(spec.field).size() == per_predicate[std::string(spec.property)]);
        CHECK(meta.has(spec.field));
        for (const auto& v : meta.get(spec.field)) CHECK(v.property == spec.property);
    }
    CHECK(meta.get(MetadataField::Creator).size() == 2);
}

TEST_CASE("unknown ontology annotations are counted") {
    auto meta = extract_metadata(model_of(R"(
        <https://w3id.org/x> a owl:Ontology ; <http://example.org/custom> "a", "b" ;
            dcterms:title "X" .)"));
    CHECK(meta.unmapped_annotations == 2);
    CHECK(meta.has(MetadataField::Title));
}

TEST_CASE("schema.org alternates satisfy fields through the alias table") {
    auto meta = extract_metadata(model_of(R"(
        <https://w3id.org/x> a owl:Ontology ; schema:name "X" ; schema:license <http://l> ;
            <http://schema.org/author> "A" .)"));
    CHECK(meta.first(MetadataField::Title) == "X");
    CHECK(meta.get(MetadataField::Title).at(0).property == "https://schema.org/name");
    CHECK(meta.has(MetadataField::License));
    CHECK(meta.has(MetadataField::Creator));

    AliasTable none;
    auto bare = extract_metadata(model_of(R"(<https://w3id.org/x> a owl:Ontology ; schema:name "X" .)"), none);
    CHECK_FALSE(bare.has(MetadataField::Title));
    CHECK(bare.unmapped_annotations == 1);
}

TEST_CASE("recommended metadata") {
    SUBCASE("full fixture: 11 Pass") {
        auto results = check_recommended_metadata(extract_metadata(full_model()));
        REQUIRE(results.size() == kRecommendedRowCount);
        for (const auto& r : results) {
            CHECK(r.status == Status::Pass);
            CHECK(r.severity == Severity::Recommended);
        }
    }
    SUBCASE("empty metadata without version info: 10 Fail + 1 Warn") {
        auto results = check_recommended_metadata(OntologyMetadata{});
        auto t = tally(results);
        CHECK(t[Status::Fail] == 10);
        CHECK(t[Status::Warn] == 1);
        CHECK(by_id(results, "metadata.prior_version").status == Status::Warn);
    }
    SUBCASE("license only") {
        auto meta = extract_metadata(
            model_of("<https://w3id.org/x> a owl:Ontology ; dcterms:license <http://l> ."));
        auto results = check_recommended_metadata(meta);
        auto t = tally(results);
        CHECK(t[Status::Pass] == 1);
        CHECK(t[Status::Fail] + t[Status::Warn] == 10);
        CHECK(by_id(results, "metadata.license").status == Status::Pass);
    }
    SUBCASE("missing prior version on a major release is a Warn") {
        auto meta = extract_metadata(model_of(R"(<https://w3id.org/x> a owl:Ontology ; owl:versionInfo "2.0.0" .)"));
        CHECK(by_id(check_recommended_metadata(meta), "metadata.prior_version").status == Status::Warn);
        meta = extract_metadata(model_of(R"(<https://w3id.org/x> a owl:Ontology ; owl:versionInfo "2.1.0" .)"));
        CHECK(by_id(check_recommended_metadata(meta), "metadata.prior_version").status == Status::Fail);
    }
}

TEST_CASE("removing one recommended property fails exactly that row") {
    const auto baseline = check_recommended_metadata(extract_metadata(full_model()));
    for (const auto& spec : metadata_fields()) {
        if (spec.guideline != Severity::Recommended) continue;
        CAPTURE(spec.key);
        auto model = rdf::parse_ontology(full_without(iri::local_name(spec.property)),
                                         rdf::RdfFormat::Turtle);
        auto results = check_recommended_metadata(extract_metadata(model));
        int flipped = 0;
        for (std::size_t i = 0; i < results.size(); ++i) {
            if (results[i].status != baseline[i].status) {
                ++flipped;
                CHECK(results[i].id == "metadata." + std::string(spec.key));
                CHECK(results[i].status == Status::Fail);
            }
        }
        CHECK(flipped == 1);
    }
}

TEST_CASE("optional metadata") {
    auto full = check_optional_metadata(extract_metadata(full_model()));
    REQUIRE(full.size() == kOptionalRowCount);
    for (const auto& r : full) {
        CHECK(r.status == Status::Pass);
        CHECK(r.severity == Severity::Optional);
    }
    auto empty = check_optional_metadata(OntologyMetadata{});
    CHECK(tally(empty)[Status::Info] == 12);

    auto logo = check_optional_metadata(
        extract_metadata(model_of("<https://w3id.org/x> a owl:Ontology ; foaf:logo <http://l.png> .")));
    CHECK(tally(logo)[Status::Pass] == 1);
    CHECK(tally(logo)[Status::Info] == 11);
}

TEST_CASE("every table row is checked exactly once") {
    auto meta = extract_metadata(full_model());
    auto rec = check_recommended_metadata(meta);
    auto opt = check_optional_metadata(meta);
    std::set<std::string> ids;
    for (const auto& r : rec) ids.insert(r.id);
    for (const auto& r : opt) ids.insert(r.id);
    CHECK(ids.size() == 23);
    for (const auto& id : ids) CHECK(find_check(id) != nullptr);
}

TEST_CASE("variant spellings are accepted with a spelling warning") {
    auto meta = extract_metadata(model_of(R"(
        <https://w3id.org/x> a owl:Ontology ; dcterms:published <http://p> ;
            owl:backwardCompatibility <https://w3id.org/x/0.1.0> .)"));
    CHECK(meta.has(MetadataField::Publisher));
    CHECK(meta.has(MetadataField::BackwardCompat));
    auto hygiene = check_metadata_hygiene(meta);
    CHECK(by_id(hygiene, "metadata.spelling.publisher").status == Status::Warn);
    CHECK(by_id(hygiene, "metadata.spelling.backward_compatibility").status == Status::Warn);
    CHECK(by_id(hygiene, "metadata.spelling.publisher").evidence.message.find("dc/terms/publisher") !=
          std::string::npos);

    auto standard = check_metadata_hygiene(extract_metadata(full_model()));
    CHECK(by_id(standard, "metadata.spelling.publisher").status != Status::Warn);
}

TEST_CASE("unexpected node kinds are flagged, not dropped") {
    auto meta = extract_metadata(model_of(R"(
        <https://w3id.org/x> a owl:Ontology ; foaf:logo "logo.png" ; dcterms:title <http://t> .)"));
    CHECK(meta.has(MetadataField::Logo));
    auto r = by_id(check_metadata_hygiene(meta), "metadata.value_kinds");
    CHECK(r.status == Status::Warn);
    CHECK(r.evidence.values.size() == 2);
}

TEST_CASE("parse_semver") {
    CHECK(parse_semver("1.0.0") == SemVer{1, 0, 0});
    CHECK(parse_semver("1.0.1") == SemVer{1, 0, 1});
    CHECK(parse_semver("10.20.30").to_string() == "10.20.30");
    CHECK_THROWS_AS(parse_semver("v1.0"), MalformedVersion);
    CHECK_THROWS_AS(parse_semver("1.0"), MalformedVersion);
    CHECK_THROWS_AS(parse_semver("1.0.0-rc1"), MalformedVersion);
    CHECK_THROWS_AS(parse_semver(" 1.0.0"), MalformedVersion);
    CHECK_THROWS_AS(parse_semver("99999999999999999999.0.0"), MalformedVersion);
    CHECK(SemVer{1, 0, 1} > SemVer{1, 0, 0});
}

TEST_CASE("property: parse_semver agrees with the regex oracle") {
    const std::regex oracle(R"(^\d+\.\d+\.\d+$)");
    const std::string alphabet = "0123456789.......v+-a ";
    std::mt19937 rng(424242);
    auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
    int accepted = 0;
    for (int i = 0; i < 20000; ++i) {
        std::string s;
        if (i % 3 == 0) {
            // shaped like a version, with occasional damage
            for (int part = 0; part < 3; ++part) {
                if (part) s += '.';
                for (std::size_t k = 0, n = 1 + pick(4); k < n; ++k) s += char('0' + pick(10));
            }
            if (pick(4) == 0) s.insert(pick(s.size() + 1), 1, alphabet[pick(alphabet.size())]);
        } else {
            for (std::size_t k = 0, n = pick(9); k < n; ++k) s += alphabet[pick(alphabet.size())];
        }
        bool expected = std::regex_match(s, oracle);
        bool parsed = true;
        try {
            (void)parse_semver(s);
        } catch (const MalformedVersion&) {
            parsed = false;
        }
        CAPTURE(s);
        REQUIRE(parsed == expected);
        accepted += parsed;
    }
    CHECK(accepted > 1000);
}

TEST_CASE("versioning matrix") {
    auto run = [](const std::string& iri, const std::string& extra) {
        auto model = model_of("<" + iri + "> a owl:Ontology" + extra + " .");
        return check_versioning(extract_metadata(model), iri);
    };
    SUBCASE("consistent versionIRI and semver") {
        auto r = run("https://w3id.org/example",
                     R"( ; owl:versionIRI <https://w3id.org/example/1.0.0> ; owl:versionInfo "1.0.0"@en)");
        for (const auto& c : r) CHECK_MESSAGE(c.status == Status::Pass, c.id);
    }
    SUBCASE("semver in the namespace") {
        auto r = run("https://w3id.org/example/1.0.0#", R"( ; owl:versionInfo "1.0.0")");
        CHECK(by_id(r, "versioning.version_in_namespace").status == Status::Fail);
    }
    SUBCASE("versionIRI and versionInfo disagree") {
        auto r = run("https://w3id.org/example",
                     R"( ; owl:versionIRI <https://w3id.org/example/1.0.0> ; owl:versionInfo "2.0.0")");
        CHECK(by_id(r, "versioning.consistency").status == Status::Fail);
        CHECK(by_id(r, "versioning.version_in_namespace").status == Status::Pass);
    }
    SUBCASE("non-semver version info") {
        auto r = run("https://w3id.org/example", R"( ; owl:versionInfo "v1.0")");
        CHECK(by_id(r, "versioning.semver").status == Status::Fail);
    }
    SUBCASE("versionIRI equal to the ontology IRI") {
        auto r = run("https://w3id.org/example", R"( ; owl:versionIRI <https://w3id.org/example>)");
        CHECK(by_id(r, "versioning.version_iri").status == Status::Fail);
    }
}

TEST_CASE("property: version-in-namespace detector") {
    std::mt19937 rng(7);
    auto num = [&] { return std::to_string(std::uniform_int_distribution<int>(0, 300)(rng)); };
    const std::vector<std::string> bases{"https://w3id.org/example", "http://purl.org/net/a/b",
                                         "https://example.org/ont/core", "http://x.org"};
    for (int i = 0; i < 2000; ++i) {
        const std::string& base = bases[i % bases.size()];
        REQUIRE_FALSE(has_version_segment(base));
        std::string v = num() + "." + num() + "." + num();
        CAPTURE(v);
        CHECK(has_version_segment(base + "/" + v + "#"));
        CHECK_FALSE(has_version_segment(base + "#"));
    }
}

TEST_CASE("profile_uri") {
    auto empty = model_of("<https://w3id.org/x> a owl:Ontology .");
    auto p = profile_uri("https://w3id.org/example#", empty);
    CHECK(p.termination == Termination::Hash);
    CHECK(p.permanent_host == PermanentHost::W3id);

    p = profile_uri("http://example.edu/onto", empty);
    CHECK(p.termination == Termination::Other);
    CHECK(p.permanent_host == PermanentHost::None);

    CHECK(profile_uri("http://purl.org/net/x/", empty).permanent_host == PermanentHost::Purl);
    CHECK(profile_uri("http://purl.org/net/x/", empty).termination == Termination::Slash);
    CHECK(profile_uri("http://purl.obolibrary.org/obo/go.owl", empty).permanent_host ==
          PermanentHost::OtherKnown);
    CHECK_THROWS_AS(profile_uri("example#", empty), InvalidIri);

    auto opaque = model_of(R"(
        <https://w3id.org/example> a owl:Ontology .
        <https://w3id.org/example#EXO_C0001> a owl:Class .
        <https://w3id.org/example#Person> a owl:Class .)");
    p = profile_uri("https://w3id.org/example", opaque);
    CHECK(p.opaque_terms == std::vector<std::string>{"https://w3id.org/example#EXO_C0001"});
    CHECK(p.opaque_terms_fraction == doctest::Approx(0.5));
    CHECK(by_id(check_uri_profile(p, "https://w3id.org/example"), "uri.opaque_terms").status == Status::Info);
    CHECK(is_opaque_local_name("GO_0008150"));
    CHECK_FALSE(is_opaque_local_name("ExampleClassA"));
}

TEST_CASE("property: termination depends only on the final character") {
    std::mt19937 rng(99);
    const std::string chars = "abc/#:.-_0";
    for (int i = 0; i < 1000; ++i) {
        std::string prefix = "http://h.org/";
        for (int k = 0; k < 6; ++k) prefix += chars[rng() % chars.size()];
        for (char last : std::string("#/xa0")) {
            auto expected = last == '#' ? Termination::Hash : last == '/' ? Termination::Slash : Termination::Other;
            CHECK(termination_of(prefix + last) == expected);
        }
    }
}

TEST_CASE("term coverage") {
    SUBCASE("one labeled class, one bare class") {
        auto cov = check_term_annotations(model_of(R"(
            <https://w3id.org/t> a owl:Ontology .
            <https://w3id.org/t#A> a owl:Class ; rdfs:label "A" ; rdfs:comment "a" .
            <https://w3id.org/t#B> a owl:Class .)"));
        CHECK(cov.total == 2);
        CHECK(cov.labeled_fraction == doctest::Approx(0.5));
        CHECK(cov.defined_fraction == doctest::Approx(0.5));
        auto results = check_term_coverage(cov);
        CHECK(by_id(results, "terms.label").status == Status::Fail);
        CHECK(by_id(results, "terms.comment").status == Status::Fail);
        CHECK(by_id(results, "terms.example").status == Status::Info);
    }
    SUBCASE("no terms") {
        auto cov = check_term_annotations(model_of("<https://w3id.org/t> a owl:Ontology ."));
        CHECK(cov.total == 0);
        CHECK(cov.labeled_fraction == 1.0);
        CHECK(cov.defined_fraction == 1.0);
    }
    SUBCASE("labels in two languages count once") {
        auto cov = check_term_annotations(
            rdf::parse_ontology(read_fixture("ontologies/multilingual.ttl"), rdf::RdfFormat::Turtle));
        CHECK(cov.labeled == 1);
        auto bridge = std::find_if(cov.terms.begin(), cov.terms.end(),
                                   [](const TermGap& g) { return g.iri == "https://w3id.org/ml#Bridge"; });
        REQUIRE(bridge != cov.terms.end());
        CHECK(bridge->label_languages == std::vector<std::string>{"en", "es"});
    }
    SUBCASE("thresholds") {
        TermCoverage cov;
        cov.total = 10;
        cov.labeled = 9;
        cov.defined = 7;
        cov.labeled_fraction = 0.9;
        cov.defined_fraction = 0.7;
        auto results = check_term_coverage(cov);
        CHECK(by_id(results, "terms.label").status == Status::Warn);
        CHECK(by_id(results, "terms.comment").status == Status::Fail);
        results = check_term_coverage(cov, {0.6, 0.5});
        CHECK(by_id(results, "terms.comment").status == Status::Pass);
    }
    SUBCASE("full fixture") {
        auto results = check_term_coverage(check_term_annotations(full_model()));
        CHECK(by_id(results, "terms.label").status == Status::Pass);
        CHECK(by_id(results, "terms.comment").status == Status::Pass);
    }
}

TEST_CASE("prefix sanity") {
    auto run = [](const std::string& prefix, const std::string& ns) {
        OntologyMetadata meta;
        meta.get(MetadataField::Prefix).push_back({rdf::Term::literal(prefix), ""});
        meta.get(MetadataField::NamespaceUri).push_back({rdf::Term::literal(ns), ""});
        return check_prefix_sanity(meta);
    };
    auto exo = run("exo", "https://w3id.org/example#");
    CHECK(by_id(exo, "prefix.format").status == Status::Pass);
    CHECK(by_id(exo, "prefix.known_collision").status == Status::Info);

    auto example = run("example", "https://w3id.org/example#");
    CHECK(by_id(example, "prefix.known_collision").status == Status::Warn);
    CHECK(by_id(example, "prefix.known_collision").evidence.message.find("http://example.org/") !=
          std::string::npos);

    CHECK(by_id(run("my-very-long-prefix!", "https://w3id.org/x#"), "prefix.format").status == Status::Warn);
    CHECK(by_id(run("abcdefghijk", "https://w3id.org/x#"), "prefix.format").status == Status::Warn);
    CHECK(by_id(check_prefix_sanity(OntologyMetadata{}), "prefix.format").status == Status::Info);
}

// Adding triples can only add evidence; it must never turn a Pass into a Fail.
TEST_CASE("property: monotonicity of audit_model") {
    const std::vector<std::string> additions{
        R"(<https://w3id.org/example> dcterms:title "Another"@fr .)",
        R"(<https://w3id.org/example> dcterms:creator "Third Person" .)",
        R"(<https://w3id.org/example> <http://example.org/custom> "x" .)",
        R"(<https://w3id.org/example> owl:priorVersion <https://w3id.org/example/0.9.0> .)",
        R"(<https://w3id.org/example#ExampleClassA> rdfs:label "Klasse A"@de .)",
        R"(<https://w3id.org/example#ExampleClassA> <http://purl.org/vocab/vann/example> "ex" .)",
        R"(<https://w3id.org/example> foaf:depiction <http://d2.png> .)",
    };
    std::string base = read_fixture("example/ontology.ttl");
    std::mt19937 rng(3);
    for (int round = 0; round < 40; ++round) {
        std::string extended = base + kPrefixes;
        for (std::size_t k = 0, n = 1 + rng() % 4; k < n; ++k) extended += additions[rng() % additions.size()] + "\n";
        auto before = audit_model(rdf::parse_ontology(base, rdf::RdfFormat::Turtle));
        auto after = audit_model(rdf::parse_ontology(extended, rdf::RdfFormat::Turtle));
        REQUIRE(before.size() == after.size());
        for (std::size_t i = 0; i < before.size(); ++i) {
            CHECK(before[i].id == after[i].id);
            if (before[i].status == Status::Pass) CHECK_MESSAGE(after[i].status != Status::Fail, after[i].id);
        }
    }
}

TEST_CASE("audit_model on the full fixture has no blocking findings") {
    auto results = audit_model(full_model());
    for (const auto& r : results) CHECK_MESSAGE(!is_blocking(r), r.id << ": " << r.evidence.message);
    std::set<std::string> ids;
    for (const auto& r : results) CHECK(ids.insert(r.id).second);
}

TEST_CASE("catalog") {
    std::set<std::string_view> ids;
    for (const auto& e : check_catalog()) {
        CHECK(ids.insert(e.id).second);
        CHECK_FALSE(e.reference.empty());
        CHECK_FALSE(e.description.empty());
    }
    REQUIRE(find_check("negotiation.version.https://w3id.org/example/1.0.0.text_html"));
    CHECK(find_check("nope") == nullptr);
    CHECK_THROWS_AS(make_result("nope", Status::Pass, ""), std::out_of_range);
    auto r = make_result("metadata.license", Status::Pass, "ok");
    CHECK(r.severity == Severity::Recommended);
    CHECK(parse_status(to_string(Status::Skipped)) == Status::Skipped);
    CHECK(parse_severity(to_string(Severity::Optional)) == Severity::Optional);
}
