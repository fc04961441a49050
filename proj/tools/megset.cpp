#include <iostream>

#include "meg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return meg::cli::run(args, std::cin, std::cout, std::cerr);
}
