// Command-line front end: algebra on symbol<TAB>value files, token
// tabulation and reconstruction, pretty display. Exit codes: 0 on success,
// 1 when `eq` finds the inputs unequal, 2 on parse or precondition errors.

#include <CLI11.hpp>

#include <cstddef>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "frab/frab.hpp"
#include "frab/tabulation.hpp"
#include "frab/text_io.hpp"

namespace {

std::string read_input(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw frab::FrabError("cannot open file: " + path);
    }
    buffer << in.rdbuf();
    return buffer.str();
}

frab::Frab load_frab(const std::string& path) {
    try {
        return frab::parse_frab_text(read_input(path));
    } catch (const frab::ParseError& e) {
        throw frab::FrabError(path + ": " + e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Keyed linear combinations over string symbols: algebra, "
                 "tabulation and display"};
    app.require_subcommand(1);
    int exit_code = 0;

    std::string token_file;
    auto* tabulate_cmd =
        app.add_subcommand("tabulate", "Count tokens of a whitespace-separated file");
    tabulate_cmd->add_option("tokenfile", token_file, "token file, - for stdin")->required();
    tabulate_cmd->callback([&] {
        const auto counts = frab::tabulate(frab::parse_token_stream(read_input(token_file)));
        std::cout << frab::render_frab_text(counts);
    });

    std::vector<std::string> add_files;
    auto* add_cmd = app.add_subcommand("add", "Group sum of two or more files");
    add_cmd->add_option("files", add_files, "input files, - for stdin")
        ->expected(2, -1)
        ->required();
    add_cmd->callback([&] {
        frab::Frab sum = load_frab(add_files[0]);
        for (std::size_t i = 1; i < add_files.size(); ++i) {
            sum = frab::add(sum, load_frab(add_files[i]));
        }
        std::cout << frab::render_frab_text(sum);
    });

    std::vector<std::string> sub_files;
    auto* sub_cmd = app.add_subcommand("sub", "Difference of two files");
    sub_cmd->add_option("files", sub_files, "minuend and subtrahend")->expected(2)->required();
    sub_cmd->callback([&] {
        std::cout << frab::render_frab_text(
            frab::subtract(load_frab(sub_files[0]), load_frab(sub_files[1])));
    });

    double scale_factor = 0.0;
    std::string scale_file;
    auto* scale_cmd = app.add_subcommand("scale", "Scalar multiple of a file");
    scale_cmd->add_option("factor", scale_factor, "multiplier")->required();
    scale_cmd->add_option("file", scale_file, "input file, - for stdin")->required();
    scale_cmd->callback([&] {
        std::cout << frab::render_frab_text(
            frab::scalar_multiply(load_frab(scale_file), scale_factor));
    });

    double zap_tolerance = 0.0;
    std::string zap_file;
    auto* zap_cmd = app.add_subcommand("zap", "Drop entries within a tolerance of zero");
    zap_cmd->add_option("--tol", zap_tolerance, "magnitude threshold")->required();
    zap_cmd->add_option("file", zap_file, "input file, - for stdin")->required();
    zap_cmd->callback([&] {
        std::cout << frab::render_frab_text(frab::zap(load_frab(zap_file), zap_tolerance));
    });

    std::string show_file;
    auto* show_cmd = app.add_subcommand("show", "Pretty display of a file");
    show_cmd->add_option("file", show_file, "input file, - for stdin")->required();
    show_cmd->callback([&] { std::cout << frab::display_frab(load_frab(show_file)); });

    std::vector<std::string> eq_files;
    auto* eq_cmd = app.add_subcommand("eq", "Exit 0 if the two files are equal, 1 if not");
    eq_cmd->add_option("files", eq_files, "files to compare")->expected(2)->required();
    eq_cmd->callback([&] {
        exit_code = frab::equals(load_frab(eq_files[0]), load_frab(eq_files[1])) ? 0 : 1;
    });

    std::string reconstruct_file;
    auto* reconstruct_cmd =
        app.add_subcommand("reconstruct", "Expand a table of counts into a token stream");
    reconstruct_cmd->add_option("file", reconstruct_file, "input file, - for stdin")
        ->required();
    reconstruct_cmd->callback([&] {
        std::cout << frab::render_token_stream(frab::reconstruct(load_frab(reconstruct_file)));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);
        }
        std::cerr << "frab: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "frab: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
