#include <iostream>

#include "sublattice_ee/cli.hpp"

int main(int argc, char** argv) {
    return sublattice::run_cli(argc, argv, std::cout, std::cerr);
}
