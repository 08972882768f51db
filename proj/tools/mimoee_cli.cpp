#include <iostream>
#include <string>
#include <vector>

#include "mimoee/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return mimoee::cli_run(args, std::cout, std::cerr);
}
