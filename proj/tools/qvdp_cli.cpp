#include <iostream>

#include "qvdp/cli.hpp"

int main(int argc, char* argv[]) { return qvdp::cli_main(argc, argv, std::cout, std::cerr); }
