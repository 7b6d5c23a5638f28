#include <iostream>
#include <string>
#include <vector>

#include "gksum/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gksum::cli::run(std::move(args), std::cout, std::cerr);
}
