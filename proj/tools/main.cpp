#include <iostream>
#include <string>
#include <vector>

#include "lensfib/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lensfib::run(args, std::cout, std::cerr);
}
