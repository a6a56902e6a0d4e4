#include <iostream>

#include "idealproj/cli.hpp"

int main(int argc, char** argv) {
    return idealproj::run_cli(argc, argv, std::cout, std::cerr);
}
