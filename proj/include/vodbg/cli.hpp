#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "vodbg/node_handle.hpp"

namespace vodbg {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitData = 2 };

/**
 * Runs the command line `args` (args[0] is the program name). Answers go to
 * `out`, diagnostics to `err`. Returns 0 on success, 1 on a usage error and
 * 2 on a data or validation failure.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Parses "i,j,k"; throws input_error on anything else.
NodeHandle parse_node(const std::string& text);

// Parses an order list: "3", "0,2,5", "1..8" or mixtures like "0,2..4".
std::vector<std::size_t> parse_orders(const std::string& text);

}  // namespace vodbg
