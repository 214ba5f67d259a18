#include <iostream>

#include "fuzzcalc/cli.hpp"

int main(int argc, char** argv) {
    return fuzzcalc::cli::run(argc, argv, std::cout, std::cerr);
}
