#include "teich/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return teich::runCli(argc, argv, std::cout, std::cerr); }
