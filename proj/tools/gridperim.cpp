#include <iostream>

#include "gridperim/cli.hpp"

int main(int argc, char** argv) {
    return gridperim::cli::run(argc, argv, std::cout, std::cerr);
}
