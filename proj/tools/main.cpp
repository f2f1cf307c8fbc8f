#include "cli.hpp"

int main(int argc, char** argv) { return qtl_cli_main(argc, argv); }
