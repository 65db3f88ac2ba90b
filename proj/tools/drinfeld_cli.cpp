#include <iostream>
#include <string>
#include <vector>

#include "drinfeld/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const drinfeld::cli::CommandResult r = drinfeld::cli::run_command(args);
    (r.exit_code == 1 ? std::cerr : std::cout) << r.output;
    return r.exit_code;
}
