#include <iostream>

#include "fairsum/cli.hpp"

int main(int argc, char** argv) {
    return fairsum::cli::run(argc, argv, std::cout, std::cerr);
}
