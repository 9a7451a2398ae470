#include <iostream>

#include "hfcorr/cli.hpp"

int main(int argc, char** argv) { return hfcorr::run_cli(argc, argv, std::cout, std::cerr); }
