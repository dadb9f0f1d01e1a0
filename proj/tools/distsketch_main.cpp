#include <iostream>
#include <string>
#include <vector>

#include "distsketch/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return distsketch::cli::run_cli(args, std::cout, std::cerr);
}
