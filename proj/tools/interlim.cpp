#include <interlim/cli/app.hpp>

#include <iostream>

int main(int argc, char** argv) { return interlim::cli::run(argc, argv, std::cout, std::cerr); }
