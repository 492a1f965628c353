#include "eggbox/cli.hpp"

int main(int argc, char** argv) { return eggbox::cli::cli_main(argc, argv); }
