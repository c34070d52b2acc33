#include "cli.hpp"

int main(int argc, char** argv) { return braidroot::run(argc, argv, std::cout, std::cerr); }
