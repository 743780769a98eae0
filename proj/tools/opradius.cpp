#include <iostream>
#include <string>
#include <vector>

#include "opradius/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return opradius::dispatch(args, std::cout, std::cerr);
}
