#include "hankelspec/cli.hpp"

int main(int argc, char** argv) { return hankelspec::run_command(argc, argv); }
