#include "debtflow/cli.hpp"

int main(int argc, char** argv) { return debtflow::cli::main(argc, argv); }
