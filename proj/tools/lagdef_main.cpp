#include "lagdef/cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

bool read_input(const std::string &path, std::string &out) {
    if (path == "-") {
        out.assign(std::istreambuf_iterator<char>(std::cin), {});
        return true;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

} // namespace

int main(int argc, char **argv) {
    using namespace lagdef::cli;
    CLI::App app{"Deformation invariants of singular Lagrangian germs"};
    app.set_version_flag("--version", std::string(kSchemaVersion));

    std::string command, path, format = "json";
    CommandOptions options;
    app.add_option("command", command, "Command to run")
        ->required()
        ->check(CLI::IsMember(command_names()));
    app.add_option("germ", path, "Germ file, or - for standard input")->required();
    app.add_option("--degree", options.degree, "Jet order in the symplectic variables")
        ->capture_default_str();
    app.add_option("--param-degree", options.param_degree,
                   "Jet order in the parameters and time")
        ->capture_default_str();
    app.add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--order", options.order, "Monomial order for check-lagrangian")
        ->check(CLI::IsMember({"local", "global"}))
        ->capture_default_str();
    app.add_option("--mode", options.mode, "Stratification mode for pyramidal")
        ->check(CLI::IsMember({"absolute", "relative"}))
        ->capture_default_str();
    app.add_flag("--timing", options.timing, "Add wall-clock timing to the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    options.format = parse_format(format);
    try {
        options.max_degree = max_degree_from_env();
    } catch (const std::exception &e) {
        std::cerr << "lagdef: " << e.what() << "\n";
        return 1;
    }

    std::string input;
    if (!read_input(path, input)) {
        std::cerr << "lagdef: cannot read " << path << "\n";
        return 1;
    }
    auto result = run_command(command, input, options);
    std::cout << result.output;
    if (!result.error.empty())
        std::cerr << (result.parse_error ? path + ":" : std::string("lagdef: ")) << result.error << "\n";
    return result.exit_code;
}
