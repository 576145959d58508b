#include "cli.hpp"

#include <cstdio>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    stackhom::cli::CliResult res = stackhom::cli::run(args);
    std::fputs(res.output.c_str(), stdout);
    return res.exit_code;
}
