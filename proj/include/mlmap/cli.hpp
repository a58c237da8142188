#pragma once

namespace mlmap {

// CLI entry point (exposed so tests can drive the real command surface).
// Returns 0 on success, 1 on validation errors, 2 on I/O errors.
int run_cli(int argc, const char* const* argv);

}  // namespace mlmap
