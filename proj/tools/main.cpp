#include "qlt/cli.hpp"

int main(int argc, char** argv) { return qlt::cli::run(argc, argv); }
