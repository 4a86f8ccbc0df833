#pragma once

namespace carlab {

// Entry point of the `carlab` command line tool. Subcommands: cor-matrix,
// eigen, mc-cov, simulate-tests, reproduce. Returns the process exit code.
int run_command(int argc, char** argv);

}  // namespace carlab
