#include <iostream>

#include "ulis/cli.hpp"

int main(int argc, char** argv) {
    return ulis::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
