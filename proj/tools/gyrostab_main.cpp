// Command-line front end: classify | scan | isolate | simulate | selfcheck,
// each driven by a JSON config file.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gyrostab/cli.hpp"

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_path;
    std::string format;
    bool quiet = false;
};

void add_common(CLI::App* sub, CommonOpts& opts) {
    sub->add_option("--config", opts.config_path, "JSON config file")->required();
    sub->add_option("--out", opts.out_path, "output file (default: stdout)");
    sub->add_option("--format", opts.format, "output format: table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_flag("--quiet", opts.quiet, "suppress diagnostics on stderr");
}

int dispatch(gyrostab::cli::Command cmd, const CommonOpts& opts) {
    std::ifstream in(opts.config_path);
    if (!in) {
        std::cerr << "error: cannot read config file \"" << opts.config_path << "\"\n";
        return 1;
    }
    std::ostringstream text;
    text << in.rdbuf();

    std::optional<std::string> out_override;
    if (!opts.out_path.empty()) out_override = opts.out_path;
    std::optional<gyrostab::cli::Format> fmt_override;
    if (opts.format == "table") fmt_override = gyrostab::cli::Format::Table;
    else if (opts.format == "json") fmt_override = gyrostab::cli::Format::Json;
    else if (opts.format == "csv") fmt_override = gyrostab::cli::Format::Csv;

    return gyrostab::cli::run_text(text.str(), cmd, out_override, fmt_override,
                                   opts.quiet, std::cout, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stability analysis of uniform rotations of a torque-free gyrostat"};
    app.require_subcommand(1);

    using gyrostab::cli::Command;
    const std::pair<const char*, Command> commands[] = {
        {"classify", Command::Classify}, {"scan", Command::Scan},
        {"isolate", Command::Isolate},   {"simulate", Command::Simulate},
        {"selfcheck", Command::Selfcheck}};

    CommonOpts opts[5];
    int rc = 0;
    for (int i = 0; i < 5; ++i) {
        CLI::App* sub = app.add_subcommand(commands[i].first);
        add_common(sub, opts[i]);
        const Command cmd = commands[i].second;
        CommonOpts* o = &opts[i];
        sub->callback([cmd, o, &rc] { rc = dispatch(cmd, *o); });
    }

    CLI11_PARSE(app, argc, argv);
    return rc;
}
