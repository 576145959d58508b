#pragma once

#include <string>
#include <vector>

namespace stackhom::cli {

struct CliResult {
    int exit_code = 0;
    std::string output;
};

/// Full command dispatch; never throws. Exit codes: 0 ok/pass, 2 parse
/// error, 3 incompatible or missing inputs, 4 verification failure,
/// 5 stabilization cap exceeded.
CliResult run(const std::vector<std::string>& args);

} // namespace stackhom::cli
