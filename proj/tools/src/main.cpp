#include <iostream>

#include <swan/cli.hpp>

int main(int argc, char **argv)
{
    return swan::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr, std::cin);
}
