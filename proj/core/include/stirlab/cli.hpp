#pragma once

namespace stirlab {

// Entry point of the command-line surface. Subcommands:
//   table --which {1|2|3} [--format markdown|csv|json] [--digits K]
//   error --method <id> --n <int> [--digits K]
//   theta --n <int>
//   order --method <id> --ns <comma-list>
//   fit-a --ns <comma-list>
//   selftest
// Global flags: --bits <int> (default 384, or the STIRLAB_BITS environment
// variable), --validate {none|double}.
// Exit status: 0 success, 1 numeric/certification failure, 2 usage error.
int cli_main(int argc, char** argv);

}  // namespace stirlab
