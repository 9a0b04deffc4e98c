#include "bloch/harness/cli.hpp"

int main(int argc, char** argv) { return bloch::cli_main(argc, argv); }
