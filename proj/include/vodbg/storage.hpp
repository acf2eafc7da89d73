#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "vodbg/var_order.hpp"

namespace vodbg {

/*
 * Index file layout (.vdbg), all integers little-endian:
 *
 *   "VODBG"            5 bytes magic
 *   version            u8, currently 1
 *   K, sigma, n_rows, n_nodes   u64 each
 *   alphabet           sigma bytes in rank order ('$' implicit, smallest)
 *   five sections, each a u64 byte length followed by its payload:
 *     L       bitvector: u64 n_bits, ceil(n_bits/64) u64 words (bit p-1 of the
 *             stream = position p, LSB first)
 *     flags   bitvector, same encoding
 *     W       packed ints: u64 count, u8 width, ceil(count*width/64) u64 words;
 *             unflagged edge labels ($ = 0, i-th alphabet symbol = i)
 *     C       sigma+2 u64 cumulative counts
 *     L*      packed ints, width ceil(log2(K+1))
 *
 * Rank/select directories and wavelet-tree levels are rebuilt on load.
 */
inline constexpr char kIndexMagic[5] = {'V', 'O', 'D', 'B', 'G'};
inline constexpr std::uint8_t kIndexVersion = 1;

// Writes the index; returns the number of bytes written. Throws io_error.
std::size_t save(const VarOrderIndex& index, std::ostream& sink);
void save_file(const VarOrderIndex& index, const std::string& path);

/**
 * Reads an index written by save(). Throws format_error on a bad magic,
 * version_error on an unknown version, corruption_error on truncated or
 * inconsistent content; never returns a partially built index.
 */
VarOrderIndex load(std::istream& source);
VarOrderIndex load_file(const std::string& path);

}  // namespace vodbg
