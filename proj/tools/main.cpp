#include "cli.hpp"

int main(int argc, char** argv) { return carlab::run_command(argc, argv); }
