#pragma once

namespace hankelspec {

// Entry point of the command-line front door; returns the process exit code
// (0 success, 1 validation error, 2 tolerance failure).  Errors are emitted
// as JSON documents on standard error.
int run_command(int argc, const char* const* argv);

} // namespace hankelspec
