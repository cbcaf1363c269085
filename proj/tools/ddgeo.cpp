#include "ddgeo/harness.hpp"

int main(int argc, char** argv) { return ddgeo::cli_main(argc, argv); }
