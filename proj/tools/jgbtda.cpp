#include <iostream>

#include "jgbtda/cli.hpp"

int main(int argc, char** argv) { return jgbtda::cli::run(argc, argv, std::cout, std::cerr); }
