#include "paracut/cli.hpp"

int main(int argc, char** argv) { return paracut::cli::run(argc, argv); }
