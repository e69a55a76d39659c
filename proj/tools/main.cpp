#include "cli.hpp"

int main(int argc, char** argv) { return catwords::cli::run(argc, argv); }
