#include <iostream>

#include "sgp/cli.hpp"

int main(int argc, char** argv) {
    return sgp::cli_main(argc, argv, std::cout, std::cerr);
}
