#include <iostream>

#include "rmlab/cli.hpp"

int main(int argc, char** argv) {
    return rmlab::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
