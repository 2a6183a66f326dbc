#include <cstdlib>
#include <iostream>

#include <unistd.h>

#include "lightsout_cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    lightsout::cli::Style style{.color = std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO)};
    return lightsout::cli::run(args, std::cout, std::cerr, style);
}
