#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rotexp/cli.hpp"

namespace {

using rotexp::cli::kExitInvalidInput;

bool read_all(const std::string& path, std::string& text) {
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
        return true;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
    return true;
}

bool write_all(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text << std::flush;
        return static_cast<bool>(std::cout);
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    return static_cast<bool>(out);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closed-form exponential and logarithm maps for rotations in 3, 4 and 5 dimensions", "rotexp"};
    app.set_version_flag("--version", std::string(rotexp::io::kToolVersion));
    app.require_subcommand(1);

    rotexp::cli::Options opts;
    std::string          input  = "-";
    std::string          output = "-";
    std::string          select;

    const auto add_io = [&](CLI::App* sub) {
        sub->add_option("-i,--input", input, "Input document path, - for stdin")->capture_default_str();
        sub->add_option("-o,--output", output, "Output document path, - for stdout")->capture_default_str();
        sub->add_option("--tol", opts.tol, "Validation tolerance")->capture_default_str();
        sub->add_option("--select", select, "Output matrix to read when the input is a result document");
    };
    add_io(app.add_subcommand("exp", "Exponential of an antisymmetric matrix"));
    add_io(app.add_subcommand("log", "Logarithm of a rotation"));
    add_io(app.add_subcommand("decompose", "Split a 4x4 or 5x5 generator into two orthogonal wedges"));
    add_io(app.add_subcommand("check", "Report which matrix kinds the input qualifies as"));

    CLI::App* bench = app.add_subcommand("bench", "Time closed forms against the series oracle");
    bench->add_option("--dim", opts.dim, "Dimension (3, 4 or 5)")->capture_default_str();
    bench->add_option("--trials", opts.trials, "Number of random inputs")->capture_default_str();
    bench->add_option("--seed", opts.seed, "Generator seed")->capture_default_str();
    bench->add_option("-o,--output", output, "Output document path, - for stdout")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        (void)app.exit(e);
        return kExitInvalidInput;
    }
    if (!select.empty()) opts.select = select;

    const std::string command = app.get_subcommands().front()->get_name();
    std::string       text;
    if (command != "bench" && !read_all(input, text)) {
        std::cerr << "rotexp: error: cannot read " << input << '\n';
        return kExitInvalidInput;
    }

    const rotexp::cli::CommandResult res = rotexp::cli::run(command, text, opts);
    for (const auto& w : res.warnings) std::cerr << "rotexp: warning: " << w << '\n';
    if (res.document && !write_all(output, rotexp::io::dump(*res.document))) {
        std::cerr << "rotexp: error: cannot write " << output << '\n';
        return rotexp::cli::kExitInternal;
    }
    if (!res.error.empty()) std::cerr << "rotexp: error: " << res.error << '\n';
    return res.exit_code;
}
