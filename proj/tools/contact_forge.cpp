#include "contact_forge/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return contact_forge::cli::run_cli(argc, argv, std::cout, std::cerr); }
