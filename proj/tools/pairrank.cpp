#include "pairrank/cli.hpp"

int main(int argc, char** argv) { return pairrank::run_cli(argc, argv); }
