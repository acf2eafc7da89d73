#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "vodbg/bit_vector.hpp"

namespace vodbg {

/**
 * Balanced, level-wise wavelet tree over integer symbols {0..sigma-1}.
 *
 * Level l stores bit (L-1-l) of every symbol, with the sequence stably
 * ordered by its top l bits, so each tree node is a contiguous range of its
 * level whose start is the number of symbols smaller than the node's first
 * value. Public positions are 1-based.
 *
 * Besides rank/select/access, the tree answers the threshold queries used to
 * change order in a variable-order de Bruijn graph: nearest position left or
 * right of a point holding a value below k, and all such positions in a
 * range. Each reported position costs O(log sigma) select operations.
 */
class WaveletTree {
public:
    using symbol_type = std::uint32_t;

    WaveletTree() = default;
    WaveletTree(std::span<const symbol_type> symbols, symbol_type sigma);

    std::size_t size() const noexcept { return size_; }
    symbol_type sigma() const noexcept { return sigma_; }
    std::size_t levels() const noexcept { return levels_.size(); }

    symbol_type access(std::size_t p) const;
    symbol_type operator[](std::size_t p) const { return access(p); }

    std::size_t rank(std::size_t i, symbol_type c) const;
    std::size_t select(std::size_t j, symbol_type c) const;

    // Largest p <= i with access(p) < k.
    std::optional<std::size_t> prev_below(std::size_t i, std::uint64_t k) const;
    // Smallest p >= j with access(p) < k.
    std::optional<std::size_t> next_below(std::size_t j, std::uint64_t k) const;
    // All p in [lo, hi] with access(p) < k, ascending. Empty when lo > hi.
    std::vector<std::size_t> range_below(std::size_t lo, std::size_t hi, std::uint64_t k) const;

    // Unchecked hot-path variants (same contracts, caller validates).
    symbol_type get(std::size_t p) const noexcept;
    std::size_t rank_unchecked(std::size_t i, symbol_type c) const noexcept;
    std::size_t select_unchecked(std::size_t j, symbol_type c) const noexcept;
    std::optional<std::size_t> prev_below_unchecked(std::size_t i, std::uint64_t k) const;
    std::optional<std::size_t> next_below_unchecked(std::size_t j, std::uint64_t k) const;

    std::vector<symbol_type> to_vector() const;

    // Level bitvectors plus the per-symbol offset table, in bits.
    std::size_t bits_used() const noexcept;

private:
    struct Node {
        std::size_t level;   // depth, 0 = root
        std::uint64_t prefix;  // top `level` bits shared by the node's values
        std::size_t start;   // offset of the node's range within its level
        std::size_t size;
    };

    Node root() const noexcept { return {0, 0, 0, size_}; }
    Node child(const Node& v, bool bit) const noexcept;
    std::uint64_t min_value(const Node& v) const noexcept {
        return v.prefix << (height() - v.level);
    }
    std::uint64_t max_value(const Node& v) const noexcept {
        return ((v.prefix + 1) << (height() - v.level)) - 1;
    }
    std::size_t height() const noexcept { return levels_.size(); }
    std::size_t first_of(std::uint64_t value) const noexcept;
    // Rank-style descent: number of the node's elements among its first x
    // mapped to the child on side `bit`.
    std::size_t descend(const Node& v, std::size_t x, bool bit) const noexcept;
    // 1-based position at the root of the x-th element of node v.
    std::size_t lift(const Node& v, std::size_t x) const noexcept;

    std::optional<std::size_t> prev_below_in(const Node& v, std::size_t x, std::uint64_t k) const;
    std::optional<std::size_t> next_below_in(const Node& v, std::size_t x, std::uint64_t k) const;
    void range_below_in(const Node& v, std::size_t a, std::size_t b, std::uint64_t k,
                        std::vector<std::size_t>& out) const;

    std::vector<BitVector> levels_;
    std::vector<std::size_t> offsets_;  // offsets_[v] = #symbols < v, for v in [0, 2^height]
    std::size_t size_ = 0;
    symbol_type sigma_ = 0;
};

}  // namespace vodbg
