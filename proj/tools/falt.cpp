#include <iostream>

#include "falt/app.hpp"

int main(int argc, char** argv) { return falt::app::run(argc, argv, std::cout, std::cerr); }
