#include "cubicprimes/cli.hpp"

int main(int argc, char** argv) { return cubic::cli::run(argc, argv); }
