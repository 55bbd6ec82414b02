#include <iostream>
#include <string>
#include <vector>

#include "cramer_lgv/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return cramer_lgv::cli::run(std::move(args), std::cout, std::cerr);
}
