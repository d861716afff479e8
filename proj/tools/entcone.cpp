#include "entcone/cli.hpp"

int main(int argc, char** argv) { return entcone::cli_main(argc, argv); }
