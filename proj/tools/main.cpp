#include <iostream>
#include <vector>

#include "wittkit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return wittkit::run_cli(args, std::cout, std::cerr);
}
