#include <iostream>
#include <string>
#include <vector>

#include "braidrep/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return braidrep::run_cli(args, std::cout, std::cerr);
}
