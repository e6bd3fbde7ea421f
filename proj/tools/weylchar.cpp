#include <iostream>

#include "weylchar/cli.hpp"

int main(int argc, char** argv)
{
    return weylchar::cli::run(argc, argv, std::cout, std::cerr);
}
