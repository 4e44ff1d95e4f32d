#include <iostream>

#include "omit/commands.hpp"

int main(int argc, char** argv) {
    return omit::run_cli(argc, argv, std::cout, std::cerr);
}
