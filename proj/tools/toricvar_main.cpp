#include "toric/io.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    toric::CliResult r = toric::run_command(args);
    std::cout << r.output;
    return r.exit_code;
}
