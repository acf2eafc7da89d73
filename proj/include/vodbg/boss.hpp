#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vodbg/alphabet.hpp"
#include "vodbg/bit_vector.hpp"
#include "vodbg/edge_matrix.hpp"
#include "vodbg/node_handle.hpp"
#include "vodbg/wavelet_tree.hpp"

namespace vodbg {

struct GraphStats {
    std::size_t n_rows = 0;
    std::size_t n_nodes = 0;
    std::size_t order = 0;
    std::size_t bits_w = 0;
    std::size_t bits_last = 0;
    std::size_t bits_flags = 0;
    std::size_t bits_counts = 0;

    std::size_t bits_total() const noexcept { return bits_w + bits_last + bits_flags + bits_counts; }
};

/**
 * Succinct de Bruijn graph of a single order K (BOSS representation).
 *
 * Rows of the colex-sorted edge matrix are described by
 *   W      edge labels, with the minus-flag folded into the symbol so a
 *          flagged edge `a-` and an unflagged edge `a` are distinct symbols;
 *   flags  1 where some earlier row with the same (K-1)-suffix already has
 *          an edge with this label (both edges enter the same node);
 *   last   1 on the last row of each node interval;
 *   counts counts[c] = number of rows whose source ends with a symbol < c.
 *
 * Nodes are order-K NodeHandles. All navigation is read-only.
 */
class BossIndex {
public:
    BossIndex() = default;

    // Reassemble from stored components (unflagged labels + flags); the
    // folded wavelet tree is rebuilt. Throws construction_error on
    // inconsistent parts.
    BossIndex(std::size_t order, Alphabet alphabet, const std::vector<code_type>& labels,
              BitVector flags, BitVector last, std::vector<std::size_t> counts);

    std::size_t order() const noexcept { return order_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t rows() const noexcept { return last_.size(); }
    std::size_t nodes() const noexcept { return last_.count(true); }

    // Unflagged edge label at row r.
    code_type edge_label(std::size_t r) const;
    char edge_symbol(std::size_t r) const { return alphabet_.symbol_unchecked(edge_label(r)); }
    bool is_flagged(std::size_t r) const { return flags_.access(r); }

    const WaveletTree& w() const noexcept { return w_; }
    const BitVector& flags() const noexcept { return flags_; }
    const BitVector& last() const noexcept { return last_; }
    const std::vector<std::size_t>& counts() const noexcept { return counts_; }

    // Unflagged W as symbols, e.g. "TCCGTGGATAA$C".
    std::string w_string() const;
    std::vector<code_type> labels() const;

    // True iff v is exactly an order-K node interval.
    bool is_node(const NodeHandle& v) const noexcept;

    // Order-K node whose interval contains row r.
    NodeHandle node_from_row(std::size_t r) const;

    std::optional<NodeHandle> forward(const NodeHandle& v, char a) const;
    std::optional<NodeHandle> forward_code(const NodeHandle& v, code_type a) const;
    std::vector<NodeHandle> backward(const NodeHandle& v) const;
    char lastchar(const NodeHandle& v) const;
    code_type lastchar_code(const NodeHandle& v) const;
    std::string label(const NodeHandle& v) const;

    GraphStats stats() const;

    // Unchecked navigation for callers that already hold a valid node.
    NodeHandle node_from_row_unchecked(std::size_t r) const noexcept;
    std::optional<NodeHandle> forward_unchecked(const NodeHandle& v, code_type a) const noexcept;
    code_type lastchar_unchecked(std::size_t row) const noexcept;
    // Some predecessor (the one reached through the unflagged edge), if any.
    std::optional<NodeHandle> first_predecessor(const NodeHandle& v) const noexcept;

private:
    code_type flagged(code_type a) const noexcept {
        return static_cast<code_type>(a + alphabet_.sigma());
    }
    NodeHandle node_by_ordinal(std::size_t ordinal) const noexcept;
    void require_node(const NodeHandle& v, const char* op) const;

    std::size_t order_ = 0;
    Alphabet alphabet_;
    WaveletTree w_;
    BitVector flags_;
    BitVector last_;
    std::vector<std::size_t> counts_;
};

/**
 * BOSS index of a colex-sorted, dummy-closed matrix. Throws
 * construction_error for an empty, unsorted or unclosed matrix.
 */
BossIndex build_boss(const EdgeMatrix& matrix);

}  // namespace vodbg
