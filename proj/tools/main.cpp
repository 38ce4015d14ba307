#include <iostream>

#include "tourrank/cli.hpp"

int main(int argc, char** argv) {
    return tourrank::run_cli(argc, argv, std::cout, std::cerr);
}
