#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "cassettes.hpp"
#include "doctest.h"
#include "fairvoc/audit/catalog.hpp"
#include "fairvoc/error.hpp"
#include "fairvoc/rdf/parse.hpp"
#include "fairvoc/report/cli.hpp"
#include "fairvoc/report/report.hpp"
#include "fairvoc/report/run.hpp"
#include "fixtures.hpp"

using namespace fairvoc::report;
using fairvoc::InvalidConfig;
using fairvoc::audit::CheckResult;
using fairvoc::audit::Severity;
using fairvoc::audit::Status;
namespace fs = std::filesystem;
namespace testing = fairvoc::testing;
namespace audit = fairvoc::audit;
namespace probe = fairvoc::probe;

namespace {

CheckResult result(std::string id, Status status, Severity severity) {
    CheckResult r;
    r.id = std::move(id);
    r.status = status;
    r.severity = severity;
    r.evidence.message = "m";
    r.reference = "topic";
    return r;
}

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    args.insert(args.begin(), "fairvoc");
    std::ostringstream out, err;
    int code = cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path temp_dir(const std::string& name) {
    auto dir = fs::temp_directory_path() / ("fairvoc-" + name + "-" + std::to_string(std::random_device{}()));
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::string kCassettes = testing::committed_cassettes().string();

}  // namespace

TEST_CASE("category mapping") {
    CHECK(category_of("findability.prefix_registry") == FairCategory::Findable);
    CHECK(category_of("prefix.format") == FairCategory::Findable);
    CHECK(category_of("uri.permanent") == FairCategory::Accessible);
    CHECK(category_of("negotiation.ontology.text_html") == FairCategory::Accessible);
    CHECK(category_of("negotiation.ontology.no_accept") == FairCategory::Accessible);
    CHECK(category_of("negotiation.version.https://w3id.org/example/1.0.0.text_turtle") == FairCategory::Accessible);
    CHECK(category_of("documentation.html") == FairCategory::Accessible);
    CHECK(category_of("versioning.version_in_namespace") == FairCategory::Accessible);
    CHECK(category_of("negotiation.ontology.text_turtle") == FairCategory::Interoperable);
    CHECK(category_of("negotiation.ontology.application_rdf_xml") == FairCategory::Interoperable);
    CHECK(category_of("metadata.license") == FairCategory::Reusable);
    CHECK(category_of("terms.label") == FairCategory::Reusable);
    CHECK(category_of("versioning.semver") == FairCategory::Reusable);

    ScoringConfig c;
    c.overrides = {{"documentation.", FairCategory::Reusable}, {"metadata.", FairCategory::Findable},
                   {"metadata.license", FairCategory::Accessible}};
    CHECK(category_of("documentation.html", c) == FairCategory::Reusable);
    CHECK(category_of("metadata.title", c) == FairCategory::Findable);
    CHECK(category_of("metadata.license", c) == FairCategory::Accessible);

    // every catalog id lands in exactly one category (total mapping)
    for (const auto& e : audit::check_catalog()) {
        auto cat = category_of(e.id);
        CHECK(parse_category(to_string(cat)) == cat);
    }
}

TEST_CASE("scores against hand-computed values") {
    SUBCASE("all pass") {
        auto r = assemble_report({result("metadata.a", Status::Pass, Severity::Recommended),
                                  result("metadata.b", Status::Pass, Severity::Optional),
                                  result("findability.x", Status::Pass, Severity::Optional),
                                  result("uri.x", Status::Pass, Severity::Recommended),
                                  result("negotiation.ontology.text_turtle", Status::Pass, Severity::Recommended)},
                                 "s");
        CHECK(r.scores.findable == 100.0);
        CHECK(r.scores.accessible == 100.0);
        CHECK(r.scores.interoperable == 100.0);
        CHECK(r.scores.reusable == 100.0);
        CHECK(r.scores.overall == 100.0);
    }
    SUBCASE("mixed weights") {
        // Reusable: pass 1 + 1 + 0.5 = 2.5 over 1 + 1 + 1 + 0.5 + 0.5 = 4 -> 62.5
        // Informational weight 0; Info and Skipped excluded
        auto r = assemble_report({result("metadata.a", Status::Pass, Severity::Recommended),
                                  result("metadata.b", Status::Pass, Severity::Recommended),
                                  result("metadata.c", Status::Fail, Severity::Recommended),
                                  result("metadata.d", Status::Pass, Severity::Optional),
                                  result("metadata.e", Status::Warn, Severity::Optional),
                                  result("metadata.f", Status::Fail, Severity::Informational),
                                  result("metadata.g", Status::Info, Severity::Recommended),
                                  result("metadata.h", Status::Skipped, Severity::Recommended),
                                  // Accessible: 1 / (1 + 1) -> 50
                                  result("uri.a", Status::Pass, Severity::Recommended),
                                  result("uri.b", Status::Warn, Severity::Recommended)},
                                 "s");
        CHECK(r.scores.reusable == doctest::Approx(62.5));
        CHECK(r.scores.accessible == doctest::Approx(50.0));
        CHECK_FALSE(r.scores.findable.has_value());
        CHECK_FALSE(r.scores.interoperable.has_value());
        // overall: (2.5 + 1) / (4 + 2) = 58.333...
        CHECK(r.scores.overall == doctest::Approx(350.0 / 6.0));
    }
    SUBCASE("recommended all pass and optional rows absent") {
        std::vector<CheckResult> rs;
        for (int i = 0; i < 11; ++i) rs.push_back(result("metadata.r" + std::to_string(i), Status::Pass, Severity::Recommended));
        for (int i = 0; i < 12; ++i) rs.push_back(result("metadata.o" + std::to_string(i), Status::Info, Severity::Optional));
        auto r = assemble_report(rs, "s");
        CHECK(r.scores.reusable == doctest::Approx(100.0 * 11 / 11));
    }
    SUBCASE("entirely skipped category is null, never 0") {
        auto r = assemble_report({result("negotiation.ontology.text_turtle", Status::Skipped, Severity::Recommended),
                                  result("metadata.a", Status::Pass, Severity::Recommended)},
                                 "s");
        CHECK_FALSE(r.scores.interoperable.has_value());
        auto json = render_report(r, ReportFormat::Json);
        CHECK(json.find("\"interoperable\": null") != std::string::npos);
    }
    SUBCASE("configured weights") {
        ScoringConfig c;
        c.optional = 1.0;
        auto r = assemble_report({result("metadata.a", Status::Fail, Severity::Recommended),
                                  result("metadata.b", Status::Pass, Severity::Optional)},
                                 "s", c);
        CHECK(r.scores.reusable == doctest::Approx(50.0));
    }
}

namespace {

std::vector<CheckResult> random_results(std::mt19937& rng) {
    static const char* kIds[] = {"metadata.", "terms.", "findability.", "prefix.", "uri.",
                                 "negotiation.ontology.text_turtle", "documentation.html", "versioning."};
    std::vector<CheckResult> out;
    int n = static_cast<int>(rng() % 30);
    for (int i = 0; i < n; ++i) {
        std::string id = kIds[rng() % 8];
        if (id.back() == '.') id += "c" + std::to_string(i);
        if (std::any_of(out.begin(), out.end(), [&](const CheckResult& r) { return r.id == id; })) continue;
        out.push_back(result(id, static_cast<Status>(rng() % 5), static_cast<Severity>(rng() % 3)));
        if (rng() % 3 == 0) out.back().evidence.values = {"v" + std::to_string(rng() % 10), "ü \"q\""};
    }
    return out;
}

}  // namespace

TEST_CASE("property: monotonicity, order independence, exit-code law, JSON round-trip") {
    std::mt19937 rng(5);
    for (int round = 0; round < 300; ++round) {
        auto rs = random_results(rng);
        auto base = assemble_report(rs, "https://w3id.org/s");

        bool blocking = std::any_of(rs.begin(), rs.end(), [](const CheckResult& r) {
            return r.severity == Severity::Recommended && r.status == Status::Fail;
        });
        CHECK(exit_code(base) == (blocking ? 1 : 0));

        auto shuffled = rs;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        auto again = assemble_report(shuffled, "https://w3id.org/s");
        CHECK(again.scores == base.scores);
        // ids are unique per run, so the ordering is fully determined
        CHECK(render_report(again, ReportFormat::Json) == render_report(base, ReportFormat::Json));

        for (std::size_t i = 0; i < rs.size(); ++i) {
            if (rs[i].status != Status::Fail) continue;
            auto flipped = rs;
            flipped[i].status = Status::Pass;
            auto better = assemble_report(flipped, "https://w3id.org/s");
            for (auto c : {FairCategory::Findable, FairCategory::Accessible, FairCategory::Interoperable,
                           FairCategory::Reusable}) {
                auto before = base.scores.of(c), after = better.scores.of(c);
                if (before && after) CHECK(*after >= *before - 1e-9);
            }
        }

        auto text = render_report(base, ReportFormat::Json);
        CHECK(report_from_json(text) == base);
    }
}

TEST_CASE("empty report") {
    auto r = assemble_report({}, "https://w3id.org/e", {}, "2001-02-03T04:05:06Z", {"offline", ""});
    CHECK(r.checks.empty());
    CHECK_FALSE(r.scores.overall.has_value());
    auto text = render_report(r, ReportFormat::Json);
    CHECK(report_from_json(text) == r);
    CHECK(exit_code(r) == 0);
    CHECK(render_report(r, ReportFormat::Markdown).find("| Overall | n/a |") != std::string::npos);
}

TEST_CASE("report JSON schema") {
    auto r = assemble_report({result("metadata.a", Status::Fail, Severity::Recommended)}, "https://w3id.org/s", {},
                             std::string(kFixedClock), {"replay", "dir"});
    auto text = render_report(r, ReportFormat::Json);
    for (const char* key : {"\"subject\"", "\"tool_version\": \"0.1.0\"", "\"timestamp\": \"2000-01-01T00:00:00Z\"",
                            "\"scores\"", "\"findable\"", "\"accessible\"", "\"interoperable\"", "\"reusable\"",
                            "\"overall\"", "\"checks\"", "\"id\"", "\"category\"", "\"severity\"", "\"status\"",
                            "\"evidence\"", "\"reference\"", "\"environment\""})
        CHECK_MESSAGE(text.find(key) != std::string::npos, key);
    CHECK_THROWS_AS(report_from_json("{}"), InvalidConfig);
    CHECK_THROWS_AS(report_from_json("not json"), InvalidConfig);
}

TEST_CASE("markdown lists failures first") {
    auto r = assemble_report({result("metadata.a", Status::Pass, Severity::Recommended),
                              result("metadata.z", Status::Fail, Severity::Recommended),
                              result("findability.b", Status::Warn, Severity::Optional),
                              result("uri.c", Status::Info, Severity::Informational)},
                             "https://w3id.org/s");
    auto md = render_report(r, ReportFormat::Markdown);
    auto fail = md.find("`metadata.z`"), warn = md.find("`findability.b`"), pass = md.find("`metadata.a`");
    CHECK(md.find("| Reusable | 50.0 |") != std::string::npos);
    CHECK(fail < warn);
    CHECK(warn < pass);
}

TEST_CASE("tool configuration") {
    auto c = parse_tool_config(R"(
# weights
weight.optional = 0.25
threshold.terms.pass = 0.9
threshold.terms.warn = 0.5
registry.prefixcc = http://localhost/{prefix}
probe.concurrency = 2
probe.timeout = 1.5
probe.direct_200 = pass
category.documentation. = reusable
alias.license = http://example.org/licence, http://example.org/lic
)");
    CHECK(c.scoring.optional == 0.25);
    CHECK(c.audit.thresholds.pass == 0.9);
    CHECK(c.registries.prefixcc == "http://localhost/{prefix}");
    CHECK(c.matrix.concurrency == 2);
    CHECK(c.matrix.timeout == std::chrono::milliseconds(1500));
    CHECK(c.matrix.direct_200 == Status::Pass);
    CHECK(category_of("documentation.html", c.scoring) == FairCategory::Reusable);
    auto& lic = c.audit.aliases[audit::MetadataField::License];
    CHECK(std::count(lic.begin(), lic.end(), "http://example.org/lic") == 1);

    CHECK_THROWS_AS(parse_tool_config("weight.optional = lots"), InvalidConfig);
    CHECK_THROWS_AS(parse_tool_config("threshold.terms.warn = 1\nthreshold.terms.pass = 0.5"), InvalidConfig);
    CHECK_THROWS_AS(parse_tool_config("category.metadata. = tasty"), InvalidConfig);
    CHECK_THROWS_AS(parse_tool_config("probe.concurrency = 0"), InvalidConfig);
    CHECK_THROWS_AS(parse_tool_config("colour = blue"), InvalidConfig);
    CHECK_THROWS_AS(parse_tool_config("alias.nonsense = http://x"), InvalidConfig);
}

TEST_CASE("offline runs skip every web check") {
    auto model = fairvoc::rdf::parse_ontology(testing::read_fixture("example/ontology.ttl"),
                                              fairvoc::rdf::RdfFormat::Turtle);
    CheckOptions options;
    auto results = run_checks(model, options);
    std::size_t skipped = 0;
    for (const auto& r : results) {
        bool web = r.id.starts_with("negotiation.") || r.id.starts_with("findability.") || r.id == "documentation.html";
        CHECK(web == (r.status == Status::Skipped));
        skipped += r.status == Status::Skipped;
    }
    // 4 ontology cells, 2 cells for each of 2 version IRIs, documentation, 3 findability checks
    CHECK(skipped == 4 + 4 + 1 + 3);
    CHECK_THROWS_AS(load_ontology("https://w3id.org/example", nullptr), fairvoc::Error);
}

TEST_CASE("committed cassettes match a fresh recording") {
    auto dir = temp_dir("cassettes");
    auto report = testing::record_example_cassettes(dir);
    CHECK(exit_code(report) == 0);
    std::set<std::string> fresh, committed;
    for (const auto& e : fs::directory_iterator(dir)) fresh.insert(e.path().filename().string());
    for (const auto& e : fs::directory_iterator(testing::committed_cassettes()))
        committed.insert(e.path().filename().string());
    CHECK(fresh == committed);
    for (const auto& name : fresh) {
        CAPTURE(name);
        CHECK(slurp(dir / name) == slurp(testing::committed_cassettes() / name));
    }
    fs::remove_all(dir);
}

TEST_CASE("cli: check") {
    SUBCASE("example ontology through cassettes") {
        auto run = cli({"check", testing::kExampleIri, "--format", "json", "--cassette", kCassettes, "--offline",
                        "--fixed-clock"});
        CHECK(run.code == 0);
        auto report = report_from_json(run.out);
        CHECK(report.subject == testing::kExampleIri);
        CHECK(report.environment.network == "offline");
        for (const auto& c : report.checks) {
            if (c.result.id.starts_with("negotiation."))
                CHECK((c.result.status == Status::Pass || c.result.status == Status::Info));
            if (c.category == FairCategory::Accessible) CHECK_FALSE(audit::is_blocking(c.result));
        }
        CHECK(report.scores.accessible == 100.0);
        CHECK(report.scores.reusable.has_value());
        auto again = cli({"check", testing::kExampleIri, "--format", "json", "--cassette", kCassettes, "--offline",
                          "--fixed-clock"});
        CHECK(again.out == run.out);
    }
    SUBCASE("cassette directory from the environment") {
        ::setenv("FAIRVOC_CASSETTE_DIR", kCassettes.c_str(), 1);
        auto run = cli({"check", testing::kExampleIri, "--fixed-clock"});
        ::unsetenv("FAIRVOC_CASSETTE_DIR");
        CHECK(run.code == 0);
        CHECK(report_from_json(run.out).environment.network == "replay");
    }
    SUBCASE("metadata-deficient file") {
        auto run = cli({"check", testing::fixture_path("ontologies/broken.ttl").string(), "--offline"});
        CHECK(run.code == 1);
    }
    SUBCASE("malformed file") {
        auto run = cli({"check", testing::fixture_path("ontologies/malformed.ttl").string(), "--offline"});
        CHECK(run.code == 2);
        CHECK(run.err.find("line 3") != std::string::npos);
    }
    SUBCASE("usage errors") {
        CHECK(cli({"check", "--format", "yaml", "x"}).code == 2);
        CHECK(cli({}).code == 2);
        CHECK(cli({"frobnicate"}).code == 2);
        CHECK(cli({"check", "/nonexistent/file.ttl", "--offline"}).code == 2);
        CHECK(cli({"check", testing::kExampleIri, "--offline"}).code == 2);
        CHECK(cli({"check", testing::kExampleIri, "--offline", "--record", "--cassette", "/tmp"}).code == 2);
        CHECK(cli({"check", "x.ttl", "--timeout", "-1", "--offline"}).code == 2);
        CHECK(cli({"check", "--help"}).code == 0);
    }
    SUBCASE("a cassette miss is a runtime error, not a network call") {
        auto empty = temp_dir("empty");
        auto run = cli({"check", testing::kExampleIri, "--cassette", empty.string()});
        CHECK(run.code == 2);
        fs::remove_all(empty);
    }
    SUBCASE("markdown") {
        auto run = cli({"check", testing::fixture_path("example/ontology.ttl").string(), "--offline", "--format",
                        "md", "--fixed-clock"});
        CHECK(run.code == 0);
        CHECK(run.out.starts_with("# FAIR report: https://w3id.org/example"));
    }
    SUBCASE("config file") {
        auto dir = temp_dir("cfg");
        std::ofstream(dir / "c.txt") << "weight.recommended = 2\nprobe.direct_200 = sideways\n";
        auto run = cli({"check", testing::fixture_path("example/ontology.ttl").string(), "--offline", "--config",
                        (dir / "c.txt").string()});
        CHECK(run.code == 2);
        fs::remove_all(dir);
    }
}

TEST_CASE("cli: scaffold, diagram, catalog") {
    SUBCASE("catalog") {
        auto run = cli({"catalog"});
        CHECK(run.code == 0);
        CHECK(run.out.find("metadata.license\trecommended") != std::string::npos);
    }
    SUBCASE("diagram") {
        auto run = cli({"diagram", testing::fixture_path("diagram/notation.ttl").string(), "--style", "diamonds"});
        CHECK(run.code == 0);
        CHECK(run.out == testing::read_fixture("diagram/notation.diamonds.dot"));
        CHECK(run.err.empty());
        CHECK(cli({"diagram", "x.ttl", "--style", "boxes"}).code == 2);
        auto dir = temp_dir("dot");
        CHECK(cli({"diagram", testing::fixture_path("diagram/notation.ttl").string(), "--out",
                   (dir / "d.dot").string()})
                  .code == 0);
        CHECK(slurp(dir / "d.dot") == testing::read_fixture("diagram/notation.arrows.dot"));
        fs::remove_all(dir);
    }
    SUBCASE("scaffold") {
        auto dir = temp_dir("scaffold");
        fs::copy_file(testing::fixture_path("example/ontology.ttl"), dir / "ontology.ttl");
        std::ofstream(dir / "release.conf") << "ontology_iri = https://w3id.org/example\n"
                                               "latest_version = 1.0.1\n"
                                               "versions = 1.0.0, 1.0.1\n"
                                               "doc_base_url = https://dgarijo.github.io/example\n"
                                               "source = ontology.ttl\n";
        auto dry = cli({"scaffold", (dir / "release.conf").string(), "--dry-run"});
        CHECK(dry.code == 0);
        CHECK(dry.out.find("release/1.0.1/ontology.ttl\tcopy of") != std::string::npos);
        CHECK_FALSE(fs::exists(dir / "out"));

        auto run = cli({"scaffold", (dir / "release.conf").string(), "--out", (dir / "out").string()});
        CHECK(run.code == 0);
        CHECK(fs::exists(dir / "out" / ".htaccess"));
        CHECK(slurp(dir / "out" / "release" / "1.0.1" / "ontology.ttl") == slurp(dir / "ontology.ttl"));

        std::vector<std::pair<std::string, std::string>> files;
        for (const auto& e : fs::recursive_directory_iterator(dir / "out"))
            if (e.is_regular_file())
                files.emplace_back(fs::relative(e.path(), dir / "out").generic_string(), slurp(e.path()));
        auto web = testing::serve_release("https://w3id.org/example", "https://dgarijo.github.io/example", files);
        auto cells = probe::check_negotiation_matrix(*web, "https://w3id.org/example",
                                                     {"https://w3id.org/example/1.0.0", "https://w3id.org/example/1.0.1"});
        for (const auto& c : cells) CHECK_FALSE(audit::is_blocking(c));

        CHECK(cli({"scaffold", (dir / "missing.conf").string()}).code == 2);
        fs::remove_all(dir);
    }
}
