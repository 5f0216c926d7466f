#include <iostream>
#include <string>
#include <vector>

#include <msep/tables.hpp>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return msep::cli_run(args, std::cout, std::cerr);
}
