#include "vodbg/boss.hpp"

#include <algorithm>
#include <string>

#include "vodbg/errors.hpp"

namespace vodbg {

BossIndex::BossIndex(std::size_t order, Alphabet alphabet, const std::vector<code_type>& labels,
                     BitVector flags, BitVector last, std::vector<std::size_t> counts)
      : order_(order),
        alphabet_(std::move(alphabet)),
        flags_(std::move(flags)),
        last_(std::move(last)),
        counts_(std::move(counts)) {
    const std::size_t n = labels.size();
    const std::size_t sigma = alphabet_.sigma();
    if (order_ == 0)
        throw construction_error("order K must be at least 1");
    if (n == 0)
        throw construction_error("empty matrix: no (K+1)-mers");
    if (flags_.size() != n || last_.size() != n)
        throw construction_error("W, flags and last have different lengths");
    if (!last_[n])
        throw construction_error("last row must close a node interval");
    if (counts_.size() != sigma + 2 || counts_.front() != 0 || counts_.back() != n
        || !std::is_sorted(counts_.begin(), counts_.end()))
        throw construction_error("symbol counts are inconsistent with the matrix");

    std::vector<WaveletTree::symbol_type> folded(n);
    for (std::size_t r = 1; r <= n; ++r) {
        const code_type a = labels[r - 1];
        if (a > sigma)
            throw construction_error("edge label code out of range at row " + std::to_string(r));
        if (flags_.get(r) && a == Alphabet::kTerminatorCode)
            throw construction_error("$ edge flagged at row " + std::to_string(r));
        folded[r - 1] = flags_.get(r) ? flagged(a) : a;
    }
    w_ = WaveletTree(folded, static_cast<WaveletTree::symbol_type>(2 * sigma + 1));
}

BossIndex build_boss(const EdgeMatrix& matrix) {
    if (matrix.empty())
        throw construction_error("empty matrix: no (K+1)-mers");
    if (!matrix.is_colex_sorted())
        throw construction_error("matrix rows are not in colex order (or contain duplicates)");
    if (!is_dummy_closed(matrix))
        throw construction_error("matrix is not closed under dummy edges");

    const std::size_t n = matrix.rows();
    const std::size_t k = matrix.order();
    const std::size_t sigma = matrix.alphabet().sigma();

    std::vector<code_type> labels(n);
    std::vector<bool> flags(n), last(n);
    std::vector<std::size_t> counts(sigma + 2, 0);
    std::vector<bool> seen_in_block(sigma + 1, false);

    for (std::size_t r = 1; r <= n; ++r) {
        const code_type a = matrix.edge_label(r);
        labels[r - 1] = a;
        ++counts[static_cast<code_type>(matrix.source(r).back()) + 1];
        last[r - 1] = r == n || matrix.source(r) != matrix.source(r + 1);

        // Rows sharing the (K-1)-suffix of their source are contiguous.
        if (r == 1 || matrix.source(r).substr(1) != matrix.source(r - 1).substr(1))
            std::fill(seen_in_block.begin(), seen_in_block.end(), false);
        if (a != Alphabet::kTerminatorCode) {
            flags[r - 1] = seen_in_block[a];
            seen_in_block[a] = true;
        }
    }
    for (std::size_t c = 1; c < counts.size(); ++c)
        counts[c] += counts[c - 1];

    return BossIndex(k, matrix.alphabet(), labels, BitVector(flags), BitVector(last),
                     std::move(counts));
}

code_type BossIndex::edge_label(std::size_t r) const {
    const auto sym = w_.access(r);
    return static_cast<code_type>(sym > alphabet_.sigma() ? sym - alphabet_.sigma() : sym);
}

std::vector<code_type> BossIndex::labels() const {
    std::vector<code_type> out(rows());
    for (std::size_t r = 1; r <= rows(); ++r)
        out[r - 1] = edge_label(r);
    return out;
}

std::string BossIndex::w_string() const {
    std::string out(rows(), Alphabet::kTerminator);
    for (std::size_t r = 1; r <= rows(); ++r)
        out[r - 1] = edge_symbol(r);
    return out;
}

bool BossIndex::is_node(const NodeHandle& v) const noexcept {
    if (v.k != order_ || v.i == 0 || v.i > v.j || v.j > rows())
        return false;
    if (v.i > 1 && !last_.get(v.i - 1))
        return false;
    return last_.get(v.j) && last_.rank1(v.j - 1) == last_.rank1(v.i - 1);
}

void BossIndex::require_node(const NodeHandle& v, const char* op) const {
    if (!is_node(v))
        throw handle_error(std::string(op) + ": [" + std::to_string(v.i) + ", "
                           + std::to_string(v.j) + "] at order " + std::to_string(v.k)
                           + " is not a node of the order-" + std::to_string(order_) + " graph");
}

NodeHandle BossIndex::node_by_ordinal(std::size_t ordinal) const noexcept {
    const std::size_t start = ordinal == 1 ? 1 : last_.select1(ordinal - 1) + 1;
    return {start, last_.select1(ordinal), order_};
}

NodeHandle BossIndex::node_from_row_unchecked(std::size_t r) const noexcept {
    return node_by_ordinal(last_.rank1(r - 1) + 1);
}

NodeHandle BossIndex::node_from_row(std::size_t r) const {
    if (r == 0 || r > rows())
        throw out_of_range_error("row " + std::to_string(r) + " outside [1, "
                                 + std::to_string(rows()) + "]");
    return node_from_row_unchecked(r);
}

code_type BossIndex::lastchar_unchecked(std::size_t row) const noexcept {
    // Largest c with counts[c] < row.
    const auto it = std::lower_bound(counts_.begin(), counts_.end(), row);
    return static_cast<code_type>(it - counts_.begin() - 1);
}

code_type BossIndex::lastchar_code(const NodeHandle& v) const {
    require_node(v, "lastchar");
    return lastchar_unchecked(v.i);
}

char BossIndex::lastchar(const NodeHandle& v) const {
    return alphabet_.symbol_unchecked(lastchar_code(v));
}

std::optional<NodeHandle> BossIndex::forward_unchecked(const NodeHandle& v,
                                                       code_type a) const noexcept {
    if (a == Alphabet::kTerminatorCode || a > alphabet_.sigma())
        return std::nullopt;
    // A node has at most one edge per label, flagged or not.
    std::size_t before = w_.rank_unchecked(v.i - 1, a);
    std::size_t t;
    if (w_.rank_unchecked(v.j, a) > before) {
        t = before + 1;
    } else {
        const code_type minus = flagged(a);
        before = w_.rank_unchecked(v.i - 1, minus);
        if (w_.rank_unchecked(v.j, minus) == before)
            return std::nullopt;
        // The flagged edge shares its target with the closest unflagged `a` above it.
        t = w_.rank_unchecked(w_.select_unchecked(before + 1, minus), a);
    }
    return node_by_ordinal(last_.rank1(counts_[a]) + t);
}

std::optional<NodeHandle> BossIndex::forward_code(const NodeHandle& v, code_type a) const {
    require_node(v, "forward");
    return forward_unchecked(v, a);
}

std::optional<NodeHandle> BossIndex::forward(const NodeHandle& v, char a) const {
    require_node(v, "forward");
    if (!alphabet_.contains(a))
        throw alphabet_error(std::string("forward: symbol '") + a + "' not in alphabet");
    return forward_unchecked(v, alphabet_.code_unchecked(a));
}

std::optional<NodeHandle> BossIndex::first_predecessor(const NodeHandle& v) const noexcept {
    const code_type c = lastchar_unchecked(v.i);
    if (c == Alphabet::kTerminatorCode)
        return std::nullopt;
    const std::size_t t = last_.rank1(v.i - 1) - last_.rank1(counts_[c]) + 1;
    return node_from_row_unchecked(w_.select_unchecked(t, c));
}

std::vector<NodeHandle> BossIndex::backward(const NodeHandle& v) const {
    require_node(v, "backward");
    std::vector<NodeHandle> out;
    const code_type c = lastchar_unchecked(v.i);
    if (c == Alphabet::kTerminatorCode)
        return out;
    const std::size_t t = last_.rank1(v.i - 1) - last_.rank1(counts_[c]) + 1;
    const std::size_t r = w_.select_unchecked(t, c);
    out.push_back(node_from_row_unchecked(r));

    // Flagged c-edges between this unflagged edge and the next one enter v too.
    const std::size_t next = t < w_.rank_unchecked(rows(), c) ? w_.select_unchecked(t + 1, c)
                                                               : rows() + 1;
    const code_type minus = flagged(c);
    const std::size_t from = w_.rank_unchecked(r, minus);
    const std::size_t to = w_.rank_unchecked(next - 1, minus);
    for (std::size_t q = from + 1; q <= to; ++q)
        out.push_back(node_from_row_unchecked(w_.select_unchecked(q, minus)));
    return out;
}

std::string BossIndex::label(const NodeHandle& v) const {
    require_node(v, "label");
    std::string out(order_, Alphabet::kTerminator);
    NodeHandle cur = v;
    for (std::size_t pos = order_; pos-- > 0;) {
        const code_type c = lastchar_unchecked(cur.i);
        if (c == Alphabet::kTerminatorCode)
            break;  // only the all-$ root ends in $; the rest is padding
        out[pos] = alphabet_.symbol_unchecked(c);
        if (pos > 0)
            cur = *first_predecessor(cur);
    }
    return out;
}

GraphStats BossIndex::stats() const {
    GraphStats s;
    s.n_rows = rows();
    s.n_nodes = nodes();
    s.order = order_;
    s.bits_w = w_.bits_used();
    s.bits_last = last_.bits_used();
    s.bits_flags = flags_.bits_used();
    s.bits_counts = 64 * counts_.size();
    return s;
}

}  // namespace vodbg
