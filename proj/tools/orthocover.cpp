#include "orthocover/cli.hpp"

int main(int argc, char** argv) { return orthocover::cli::main_entry(argc, argv); }
