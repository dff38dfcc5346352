#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "pathideal/harness.hpp"

namespace {

using pathideal::HarnessConfig;
using pathideal::Range;

std::optional<Range> parse_optional_range(const std::string& text) {
    if (text.empty()) return std::nullopt;
    return Range::parse(text);
}

void write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write to " + out_path);
    out << content;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computation and verification for powers of path ideals of line graphs"};
    app.require_subcommand(1);

    std::string n_text, t_text, s_text;
    std::string format = "csv";
    std::string out_path;
    int jobs = 0;
    bool no_cache = false;
    bool oracle = false;
    auto add_common = [&](CLI::App* cmd, bool with_format) {
        cmd->add_option("--n", n_text, "n value or range (e.g. 4 or 3..14)");
        cmd->add_option("--t", t_text, "t value or range; the upper bound may be 'n'");
        cmd->add_option("--s", s_text, "power value or range");
        if (with_format) {
            cmd->add_option("--format", format, "output format: csv|md|json");
            cmd->add_option("--out", out_path, "write output to this file instead of stdout");
        }
        cmd->add_option("--jobs", jobs, "worker threads (default: logical cores)");
        cmd->add_flag("--no-cache", no_cache, "disable the on-disk K-polynomial cache");
        cmd->add_flag("--oracle", oracle, "force independent-oracle cross-checks on");
    };

    CLI::App* verify = app.add_subcommand(
        "verify", "run theorem checks over a parameter grid and report matches");
    std::string scope_text = "all";
    verify->add_option("scope", scope_text, "all|mult|ass|covers|pd|recursions|counts");
    add_common(verify, true);

    CLI::App* table = app.add_subcommand("table", "tabulate engine values next to closed forms");
    std::string quantity;
    table->add_option("quantity", quantity, "mult|pd|deg|height")->required();
    add_common(table, true);

    CLI::App* show = app.add_subcommand("show", "print one object");
    std::string object;
    show->add_option("object", object, "ideal|dual|covers|kpoly|qpoly|betti|decomposition")
        ->required();
    int show_n = 0, show_t = 0, show_s = 1;
    show->add_option("--n", show_n, "number of variables")->required();
    show->add_option("--t", show_t, "path length")->required();
    show->add_option("--s", show_s, "power (where it applies)");
    std::string show_format = "text";
    show->add_option("--format", show_format, "text|json (betti: md|json)");

    CLI11_PARSE(app, argc, argv);

    try {
        HarnessConfig config = HarnessConfig::from_environment();
        if (jobs > 0) config.jobs = jobs;
        if (no_cache) config.no_cache = true;
        if (oracle) config.oracle = true;

        if (app.got_subcommand(verify)) {
            pathideal::VerifyRequest request;
            request.scope = pathideal::parse_scope(scope_text);
            request.n = parse_optional_range(n_text);
            request.t = parse_optional_range(t_text);
            request.s = parse_optional_range(s_text);
            request.config = config;
            pathideal::VerificationReport report = pathideal::run_verify(request);
            std::string body;
            if (format == "json") body = report.to_json();
            else if (format == "md") body = report.to_markdown();
            else if (format == "csv") body = report.to_csv();
            else throw std::invalid_argument("unknown format '" + format + "'");
            write_output(body, out_path);
            int bad = report.mismatch_count();
            std::cerr << report.records.size() << " checks, " << bad << " mismatches\n";
            return bad == 0 ? 0 : 1;
        }
        if (app.got_subcommand(table)) {
            std::string body = pathideal::run_table(quantity, parse_optional_range(n_text),
                                                    parse_optional_range(t_text),
                                                    parse_optional_range(s_text), format, config);
            write_output(body, out_path);
            return 0;
        }
        if (app.got_subcommand(show)) {
            config.apply_cache();
            std::cout << pathideal::run_show(object, show_n, show_t, show_s, show_format);
            return 0;
        }
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return 3;
    }
    return 2;
}
