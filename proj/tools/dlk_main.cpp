#include "dlk/cli.hpp"

int main(int argc, char** argv) { return dlk::run_cli(argc, argv); }
