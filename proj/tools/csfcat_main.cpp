#include <iostream>
#include <string>
#include <vector>

#include "csfcat/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return csfcat::run_cli(args, std::cout, std::cerr);
}
