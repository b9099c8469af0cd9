#include "stirlab/cli.hpp"

int main(int argc, char** argv) { return stirlab::cli_main(argc, argv); }
