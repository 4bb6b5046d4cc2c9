#pragma once

#include <ostream>

/// Entry point of the rrclosure command line tool, with injectable streams.
/// Returns 0 on success, 1 on a computation error and 2 on a usage or parse
/// error.
int rrc_cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
