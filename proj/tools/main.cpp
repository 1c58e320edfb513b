#include <iostream>
#include <string>
#include <vector>

#include "ell/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ell::cli::run(args, std::cout, std::cerr);
}
