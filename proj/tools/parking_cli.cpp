#include <iostream>
#include <string>
#include <vector>

#include <parking/cli.hpp>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return parking::cli::run(std::move(args), std::cout, std::cerr);
}
