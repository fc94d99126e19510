#include "radon_nets/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return radon_nets::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
