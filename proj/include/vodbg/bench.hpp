#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "vodbg/var_order.hpp"

namespace vodbg {

struct BenchOptions {
    std::size_t queries = 20000;
    std::uint64_t seed = 1;
    // Each operation is timed this many times; the fastest run is kept.
    std::size_t repeats = 3;
};

struct BenchRow {
    std::string op;
    std::size_t queries = 0;
    std::uint64_t checksum = 0;  // digest of the answers; seed-determined
    double mean_ns = 0.0;
};

/**
 * Mean latency of the navigation operations on random nodes. Query nodes
 * are drawn by picking a random row and shortening its order-K node to an
 * order uniform in [min(8, K), K] (narrowed where the operation needs room
 * to move: shorter_d needs k >= d, longer_d needs k + d <= K).
 *
 * Rows: forward, backward, lastchar, shorter_1, shorter_4, longer_1,
 * longer_4, maxlen, maxlen_c on the variable-order index, plus forward_K
 * (variable-order forward on order-K nodes) and boss_forward/boss_backward
 * (the plain order-K operations on the same nodes).
 */
std::vector<BenchRow> run_bench(const VarOrderIndex& index, const BenchOptions& options);

void print_bench(const std::vector<BenchRow>& rows, std::ostream& out);

const BenchRow* find_row(const std::vector<BenchRow>& rows, const std::string& op);

}  // namespace vodbg
