#include "cli.hpp"

int main(int argc, char** argv) { return neargroup::cli::run(argc, argv); }
