#include "srpos/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return srpos::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
