#include <iostream>

#include "lf/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return lf::run_cli(args, std::cout, std::cerr);
}
