#include "arsys/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_source(const std::string& path)
{
    if (path == "-" || path.empty()) {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const arsys::RunResult& result, const arsys::RunOptions& options)
{
    if (options.json_format)
        std::cout << result.json.dump(2) << "\n";
    else
        std::cout << result.text;
    if (!options.dot_path.empty() && result.json.contains("dot")) {
        std::ofstream out(options.dot_path);
        if (!out)
            throw std::invalid_argument("cannot write DOT file '" + options.dot_path + "'");
        out << result.json.at("dot").get<std::string>();
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact finiteness decisions and rank-2 classification for "
                 "Weyl groupoids of diagonal braidings"};
    app.require_subcommand(1);
    app.fallthrough(); // allow the global flags after the subcommand

    arsys::RunOptions options;
    std::string format = "text";
    app.add_option("--cap", options.cap, "node/step cap for enumeration")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--dot", options.dot_path, "write the exchange graph as DOT");

    std::string input_a = "-";
    std::string input_b;

    CLI::App* classify = app.add_subcommand(
        "classify", "decide finiteness, list roots, match the rank-2 table");
    classify->add_option("input", input_a, "input file (JSON), '-' for stdin");

    CLI::App* groupoid =
        app.add_subcommand("groupoid", "enumerate the groupoid nodes and edges");
    groupoid->add_option("input", input_a, "input file (JSON), '-' for stdin");

    CLI::App* equiv = app.add_subcommand("equiv", "compare two braidings");
    equiv->add_option("--mode", options.mode, "twist or weyl")
        ->check(CLI::IsMember({"twist", "weyl"}));
    equiv->add_option("first", input_a, "first input file")->required();
    equiv->add_option("second", input_b, "second input file")->required();

    app.add_subcommand("table", "verify the built-in rank-2 classification table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    options.json_format = format == "json";

    try {
        arsys::RunResult result;
        if (classify->parsed())
            result = arsys::run_classify(arsys::parse_input(read_source(input_a)), options);
        else if (groupoid->parsed())
            result = arsys::run_groupoid(arsys::parse_input(read_source(input_a)), options);
        else if (equiv->parsed())
            result = arsys::run_equiv(arsys::parse_input(read_source(input_a)),
                                      arsys::parse_input(read_source(input_b)), options);
        else
            result = arsys::run_table(options);
        emit(result, options);
        return result.exit_code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
