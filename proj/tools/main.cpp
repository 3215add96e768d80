#include "metacirc/cli.hpp"

int main(int argc, char** argv) { return metacirc::cli::run(argc, argv); }
