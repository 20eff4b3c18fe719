#include <iostream>

#include "izeta/commands.hpp"

int main(int argc, char** argv) { return izeta::cli::run(argc, argv, std::cout, std::cerr); }
