#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vodbg/boss.hpp"
#include "vodbg/edge_matrix.hpp"
#include "vodbg/node_handle.hpp"
#include "vodbg/wavelet_tree.hpp"

namespace vodbg {

/**
 * Every de Bruijn graph of order k <= K over one BOSS matrix.
 *
 * lstar[p], 1 <= p < n_rows, is the length of the longest common suffix of
 * the sources of rows p and p+1 (K when they are the same node). A node of
 * order k is a maximal row interval whose interior boundaries all have
 * lstar >= k; lstar positions 0 and n_rows behave as -infinity.
 *
 * Order-changing operations:
 *   shorter(v, k)  node labelled by the last k symbols of v's label
 *   longer(v, k)   all order-k nodes whose labels end with v's label
 *   maxlen(v, a)   an order-K node ending with v's label that has an
 *                  a-edge (a = nullopt: any order-K node); picks the
 *                  smallest qualifying row
 * and forward/backward/lastchar/label at any order, derived from the
 * order-K BOSS operations through those three.
 */
class VarOrderIndex {
public:
    VarOrderIndex() = default;
    VarOrderIndex(BossIndex boss, WaveletTree lstar);

    const BossIndex& boss() const noexcept { return boss_; }
    const WaveletTree& lstar() const noexcept { return lstar_; }
    std::size_t max_order() const noexcept { return boss_.order(); }
    std::size_t rows() const noexcept { return boss_.rows(); }
    const Alphabet& alphabet() const noexcept { return boss_.alphabet(); }

    // The single order-0 node covering every row.
    NodeHandle root() const noexcept { return {1, rows(), 0}; }

    bool validate_handle(const NodeHandle& v) const noexcept;

    std::optional<NodeHandle> maxlen(const NodeHandle& v, std::optional<char> a) const;
    NodeHandle shorter(const NodeHandle& v, std::size_t k) const;
    std::vector<NodeHandle> longer(const NodeHandle& v, std::size_t k) const;

    std::optional<NodeHandle> forward(const NodeHandle& v, char a) const;
    std::vector<NodeHandle> backward(const NodeHandle& v) const;
    std::optional<char> lastchar(const NodeHandle& v) const;
    std::string label(const NodeHandle& v) const;

    // All nodes of the order-k graph, ascending.
    std::vector<NodeHandle> nodes(std::size_t k) const;

    // Bits of the lstar wavelet tree (the cost of variable order on top of BOSS).
    std::size_t lstar_bits() const noexcept { return lstar_.bits_used(); }
    std::size_t total_bits() const noexcept { return boss_.stats().bits_total() + lstar_bits(); }

    // Unchecked variants; caller guarantees v is valid and k in range.
    NodeHandle shorter_unchecked(const NodeHandle& v, std::size_t k) const;
    std::vector<NodeHandle> longer_unchecked(const NodeHandle& v, std::size_t k) const;
    std::optional<NodeHandle> maxlen_unchecked(const NodeHandle& v, code_type a) const noexcept;
    std::optional<NodeHandle> forward_unchecked(const NodeHandle& v, code_type a) const;
    std::vector<NodeHandle> backward_unchecked(const NodeHandle& v) const;

    // Predecessor list of a below-K node before dedup (one entry per
    // extension in longer(v, v.k + 1) that has a predecessor).
    std::vector<NodeHandle> backward_candidates(const NodeHandle& v) const;

private:
    void require_valid(const NodeHandle& v, const char* op) const;

    BossIndex boss_;
    WaveletTree lstar_;
};

// lstar[p] for adjacent matrix rows; values in [0, K].
std::vector<WaveletTree::symbol_type> longest_common_suffixes(const EdgeMatrix& matrix);

/**
 * Adds the lstar wavelet tree to `boss`, computed from the matrix the index
 * was built from. Throws construction_error on a size mismatch.
 */
VarOrderIndex build_lstar(BossIndex boss, const EdgeMatrix& matrix);

// build_boss -> build_lstar on an already sorted, dummy-closed matrix.
VarOrderIndex build_index(const EdgeMatrix& sorted_matrix);

}  // namespace vodbg
