#include <iostream>

#include "ezeta_cli/app.hpp"

int main(int argc, char** argv) { return ezeta::cli::run(argc, argv, std::cout, std::cerr); }
