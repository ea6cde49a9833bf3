#include "dynzsig/commands.hpp"

int main(int argc, char** argv) { return dynzsig::run_cli(argc, argv); }
