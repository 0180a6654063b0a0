#include "fairvoc/report/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "fairvoc/audit/catalog.hpp"
#include "fairvoc/diagram/diagram.hpp"
#include "fairvoc/error.hpp"
#include "fairvoc/probe/transport.hpp"
#include "fairvoc/rdf/parse.hpp"
#include "fairvoc/report/run.hpp"
#include "fairvoc/scaffold/scaffold.hpp"

namespace fairvoc::report {

namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string env(const char* name) {
    const char* v = std::getenv(name);
    return v ? v : "";
}

std::chrono::milliseconds seconds(double secs) {
    if (!(secs > 0)) throw InvalidConfig("timeout must be a positive number of seconds");
    return std::chrono::milliseconds(static_cast<long long>(secs * 1000));
}

struct CheckArgs {
    std::string input;
    bool offline = false;
    std::string format = "json";
    std::string cassette;
    bool record = false;
    double timeout = 0;
    std::string config;
    bool fixed_clock = false;
};

struct TransportChoice {
    std::unique_ptr<probe::Transport> inner;
    std::unique_ptr<probe::Transport> transport;
    Environment environment;
};

TransportChoice choose_transport(bool offline, const std::string& cassette, bool record) {
    TransportChoice t;
    t.environment.cassette = cassette;
    if (record) {
        if (offline) throw InvalidConfig("--record needs network access and cannot be combined with --offline");
        if (cassette.empty()) throw InvalidConfig("--record needs --cassette");
        t.inner = probe::make_http_transport();
        t.transport = std::make_unique<probe::RecordingTransport>(*t.inner, cassette);
        t.environment.network = "record";
    } else if (!cassette.empty()) {
        if (!fs::is_directory(cassette)) throw Error("cassette directory " + cassette + " does not exist");
        t.transport = std::make_unique<probe::CassetteTransport>(cassette);
        t.environment.network = offline ? "offline" : "replay";
    } else if (offline) {
        t.environment.network = "offline";
    } else {
        t.transport = probe::make_http_transport();
        t.environment.network = "online";
    }
    return t;
}

int run_check_command(const CheckArgs& a, std::ostream& out) {
    CheckOptions options;
    if (!a.config.empty()) options.config = parse_tool_config(read_file(a.config));
    if (a.timeout > 0)
        options.config.matrix.timeout = seconds(a.timeout);
    else if (auto t = env("FAIRVOC_TIMEOUT"); !t.empty())
        options.config.matrix.timeout = seconds(std::atof(t.c_str()));
    std::string cassette = a.cassette.empty() ? env("FAIRVOC_CASSETTE_DIR") : a.cassette;
    auto choice = choose_transport(a.offline, cassette, a.record);
    options.transport = choice.transport.get();
    options.environment = choice.environment;
    if (a.fixed_clock) options.clock = [] { return std::string(kFixedClock); };
    auto report = run_check(a.input, options);
    out << render_report(report, *parse_report_format(a.format));
    return exit_code(report);
}

int run_scaffold_command(const std::string& config_path, const std::string& out_dir, bool dry_run,
                         std::ostream& out) {
    auto config = scaffold::parse_config(read_file(config_path));
    if (config.source_path.empty()) throw InvalidConfig("the scaffold config needs a 'source' ontology file");
    fs::path source(config.source_path);
    if (source.is_relative()) source = fs::path(config_path).parent_path() / source;
    config.source_path = source.lexically_normal().string();
    auto model = load_ontology(config.source_path, nullptr);
    auto layout = scaffold::plan_release(config, model);
    if (dry_run) {
        for (const auto& e : layout.entries)
            out << e.path << "\t"
                << (e.kind == scaffold::SourceKind::Copy ? "copy of " + e.source : "generated " + e.source) << "\n";
        return 0;
    }
    auto files = scaffold::render_release(layout, config, model);
    scaffold::write_release(out_dir, files);
    for (const auto& [path, content] : files) out << (fs::path(out_dir) / path).string() << "\n";
    return 0;
}

int run_diagram_command(const std::string& input, const std::string& style_name, const std::string& out_file,
                        std::ostream& out, std::ostream& err) {
    auto choice = choose_transport(false, env("FAIRVOC_CASSETTE_DIR"), false);
    auto model = load_ontology(input, choice.transport.get());
    auto d = diagram::build_diagram(model, *diagram::style_from_name(style_name));
    for (const auto& t : d.skipped)
        err << "fairvoc: no notation for " << rdf::serialize_ntriples(std::span<const rdf::Triple>(&t, 1));
    std::string text = diagram::emit_diagram(d);
    if (out_file.empty()) {
        out << text;
    } else {
        std::ofstream f(out_file, std::ios::binary);
        if (!f) throw Error("cannot write " + out_file);
        f << text;
    }
    return 0;
}

void print_catalog(std::ostream& out) {
    for (const auto& e : audit::check_catalog())
        out << e.id << "\t" << audit::to_string(e.severity) << "\t" << e.reference << "\t" << e.description << "\n";
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Audit and publish Web ontologies following FAIR practices", "fairvoc"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    CheckArgs check;
    auto* check_cmd = app.add_subcommand("check", "Audit an ontology file or IRI and print a report");
    check_cmd->add_option("input", check.input, "Ontology file or http(s) IRI")->required();
    check_cmd->add_flag("--offline", check.offline, "Never open network connections");
    check_cmd->add_option("--format", check.format, "Report format")->check(CLI::IsMember({"json", "md"}));
    check_cmd->add_option("--cassette", check.cassette, "Replay HTTP exchanges from this directory");
    check_cmd->add_flag("--record", check.record, "Record live HTTP exchanges into --cassette");
    check_cmd->add_option("--timeout", check.timeout, "Per-request timeout in seconds");
    check_cmd->add_option("--config", check.config, "key = value settings file");
    check_cmd->add_flag("--fixed-clock", check.fixed_clock, "Stamp reports with a constant time");

    std::string scaffold_config, scaffold_out = ".";
    bool dry_run = false;
    auto* scaffold_cmd = app.add_subcommand("scaffold", "Generate the publication layout for a release");
    scaffold_cmd->add_option("config", scaffold_config, "Scaffold configuration file")->required();
    scaffold_cmd->add_option("--out", scaffold_out, "Output directory");
    scaffold_cmd->add_flag("--dry-run", dry_run, "List the files without writing them");

    std::string diagram_input, diagram_style = "arrows", diagram_out;
    auto* diagram_cmd = app.add_subcommand("diagram", "Emit a graphviz diagram of the ontology");
    diagram_cmd->add_option("input", diagram_input, "Ontology file or http(s) IRI")->required();
    diagram_cmd->add_option("--style", diagram_style, "Notation variant")
        ->check(CLI::IsMember({"arrows", "diamonds"}));
    diagram_cmd->add_option("--out", diagram_out, "Write the dot text here instead of stdout");

    auto* catalog_cmd = app.add_subcommand("catalog", "List every check");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check_cmd->parsed()) return run_check_command(check, out);
        if (scaffold_cmd->parsed()) return run_scaffold_command(scaffold_config, scaffold_out, dry_run, out);
        if (diagram_cmd->parsed()) return run_diagram_command(diagram_input, diagram_style, diagram_out, out, err);
        if (catalog_cmd->parsed()) {
            print_catalog(out);
            return 0;
        }
    } catch (const std::exception& e) {
        err << "fairvoc: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace fairvoc::report
