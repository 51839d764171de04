#include <iostream>

#include "rgsd_cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return rgsd::cli::run_cli(std::move(args), std::cout, std::cerr);
}
