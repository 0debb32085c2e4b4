#include <iostream>
#include <string>
#include <vector>

#include "spfilt/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return spfilt::run_cli(args, std::cout, std::cerr);
}
