#include <iostream>
#include <string>
#include <vector>

#include "nekbound/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv, argv + argc);
    return nekbound::cli::run(args, std::cout, std::cerr);
}
