#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vodbg/var_order.hpp"

namespace vodbg {

/**
 * Maximal non-branching paths of the order-k graph, spelled as strings.
 *
 * Only $-free nodes take part. A node continues the path of its predecessor
 * when it has exactly one such predecessor and that predecessor has exactly
 * one outgoing edge; isolated cycles are emitted once, starting at their
 * smallest interval. Output is ordered by the starting node's interval and
 * filtered to length >= min_length. k = 0 yields nothing.
 */
std::vector<std::string> contigs(const VarOrderIndex& index, std::size_t k,
                                 std::size_t min_length = 0);

}  // namespace vodbg
