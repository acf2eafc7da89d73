#include <iostream>
#include <string>
#include <vector>

#include "vodbg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return vodbg::run_cli(args, std::cout, std::cerr);
}
