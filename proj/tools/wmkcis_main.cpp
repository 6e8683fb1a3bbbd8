#include <iostream>
#include <string>
#include <vector>

#include "wmkcis/io.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return wmkcis::run_cli(args, std::cout, std::cerr);
}
