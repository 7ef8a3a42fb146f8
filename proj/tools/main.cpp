#include <iostream>

#include "nichols/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return nichols::run(args, std::cout, std::cerr);
}
