#include "mdt/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return mdt::cli::run(argc, argv, std::cout, std::cerr);
}
