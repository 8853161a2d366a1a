#include <iostream>
#include <string>
#include <vector>

#include "b31542/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return b31542::run_cli(args, std::cout, std::cerr);
}
