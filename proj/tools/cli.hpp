#pragma once

// Entry point of the qutrit-lab command line tool, split out so tests can
// drive it in-process. Returns the process exit code: 0 on success, 2 on
// configuration/usage errors, 1 on runtime failures.
int qtl_cli_main(int argc, const char* const* argv);
