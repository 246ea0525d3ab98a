#pragma once

// Command-line front door. Subcommands cover every module: rank / converge /
// perturb-check / fiber / sample-kalman / sample-fiber / sweep / recover.
// Exit codes: 0 success, 1 domain errors (structured JSON diagnostics on
// stderr), 2 usage errors.

namespace pairrank {

int run_cli(int argc, const char* const* argv);

}  // namespace pairrank
