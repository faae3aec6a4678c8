// Command-line launcher for trajectory, sweep, and verify runs.
#include "spinfall/run.hpp"

int main(int argc, char** argv) { return spinfall::cli_main(argc, argv); }
