#include <iostream>

#include "arrchow/cli.hpp"

int main(int argc, char** argv) { return arrchow::main_entry(argc, argv, std::cout, std::cerr); }
