#include <iostream>
#include <string>
#include <vector>

#include "ptpc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ptpc::run_cli(args, std::cout, std::cerr);
}
