#include "wittsupport/cli.hpp"

int main(int argc, char** argv) { return witt::cli::main(argc, argv); }
