#include <iostream>
#include <string>
#include <vector>

#include "cbsg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cbsg::cli::run(args, std::cout, std::cerr);
}
