#include <iostream>
#include <string>
#include <vector>

#include "tribic/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tribic::cli::run(std::move(args), std::cout, std::cerr);
}
