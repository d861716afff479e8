#pragma once

namespace entcone {

// Full command-line driver; returns the process exit code.
// Verdict exit codes: 0 Entropic, 1 NotEntropic, 2 Uncharacterized.
// Usage/validation errors return 10.
int cli_main(int argc, const char* const* argv);

} // namespace entcone
