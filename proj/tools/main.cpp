#include <iostream>

#include "primerep/cli.hpp"

int main(int argc, char** argv) { return primerep::run(argc, argv, std::cout, std::cerr); }
