#include "vhiggs/cli.hpp"

int main(int argc, char** argv) { return vhiggs::cli::main_entry(argc, argv); }
