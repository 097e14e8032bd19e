#include "holeburn/runner.hpp"

int main(int argc, char** argv) { return holeburn::cli_main(argc, argv); }
