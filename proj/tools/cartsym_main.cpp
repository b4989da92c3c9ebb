#include <iostream>

#include "cartsym/cli.hpp"

int main(int argc, char** argv)
{
    return cartsym::run_cli(argc, argv, std::cout, std::cerr);
}
