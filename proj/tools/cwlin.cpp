#include "cwlin/cli.hpp"

int main(int argc, char** argv) { return cwlin::cli_main(argc, argv); }
