#include <majority/cli.hpp>

int main(int argc, char** argv) { return majority::cli::run(argc, argv); }
