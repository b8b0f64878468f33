#include "cburgers/cli.hpp"

int main(int argc, char** argv) { return cburgers::cli_main(argc, argv); }
