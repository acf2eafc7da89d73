#include "vodbg/var_order.hpp"

#include <algorithm>
#include <string>

#include "vodbg/errors.hpp"

namespace vodbg {

VarOrderIndex::VarOrderIndex(BossIndex boss, WaveletTree lstar)
      : boss_(std::move(boss)), lstar_(std::move(lstar)) {
    if (lstar_.size() + 1 != boss_.rows())
        throw construction_error("lstar has " + std::to_string(lstar_.size())
                                 + " entries, expected n_rows - 1 = "
                                 + std::to_string(boss_.rows() - 1));
    if (lstar_.sigma() != boss_.order() + 1)
        throw construction_error("lstar alphabet must be {0..K}");
}

std::vector<WaveletTree::symbol_type> longest_common_suffixes(const EdgeMatrix& matrix) {
    const std::size_t n = matrix.rows();
    const std::size_t k = matrix.order();
    std::vector<WaveletTree::symbol_type> out(n > 0 ? n - 1 : 0);
    for (std::size_t p = 1; p < n; ++p) {
        const std::string_view a = matrix.source(p);
        const std::string_view b = matrix.source(p + 1);
        std::size_t len = 0;
        while (len < k && a[k - 1 - len] == b[k - 1 - len])
            ++len;
        out[p - 1] = static_cast<WaveletTree::symbol_type>(len);
    }
    return out;
}

VarOrderIndex build_lstar(BossIndex boss, const EdgeMatrix& matrix) {
    if (matrix.rows() != boss.rows() || matrix.order() != boss.order())
        throw construction_error("matrix (" + std::to_string(matrix.rows()) + " rows, K = "
                                 + std::to_string(matrix.order())
                                 + ") does not match the BOSS index ("
                                 + std::to_string(boss.rows()) + " rows, K = "
                                 + std::to_string(boss.order()) + ")");
    const auto values = longest_common_suffixes(matrix);
    WaveletTree lstar(values, static_cast<WaveletTree::symbol_type>(boss.order() + 1));
    return VarOrderIndex(std::move(boss), std::move(lstar));
}

VarOrderIndex build_index(const EdgeMatrix& sorted_matrix) {
    return build_lstar(build_boss(sorted_matrix), sorted_matrix);
}

bool VarOrderIndex::validate_handle(const NodeHandle& v) const noexcept {
    const std::size_t n = rows();
    if (v.k > max_order() || v.i == 0 || v.i > v.j || v.j > n)
        return false;
    if (v.i > 1 && lstar_.get(v.i - 1) >= v.k)
        return false;
    if (v.j < n && lstar_.get(v.j) >= v.k)
        return false;
    if (v.i < v.j) {
        const auto inner = lstar_.next_below_unchecked(v.i, v.k);
        if (inner && *inner < v.j)
            return false;
    }
    return true;
}

void VarOrderIndex::require_valid(const NodeHandle& v, const char* op) const {
    if (validate_handle(v))
        return;
    std::string why;
    if (v.k > max_order())
        why = "order exceeds K = " + std::to_string(max_order());
    else if (v.i == 0 || v.i > v.j || v.j > rows())
        why = "interval outside [1, " + std::to_string(rows()) + "] or empty";
    else
        why = "interval is not a maximal run of rows sharing a length-" + std::to_string(v.k)
              + " suffix";
    throw handle_error(std::string(op) + ": " + v.to_string() + ": " + why);
}

NodeHandle VarOrderIndex::shorter_unchecked(const NodeHandle& v, std::size_t k) const {
    NodeHandle out{1, rows(), k};
    if (v.i > 1) {
        if (const auto p = lstar_.prev_below_unchecked(v.i - 1, k))
            out.i = *p + 1;
    }
    if (v.j < rows()) {
        if (const auto q = lstar_.next_below_unchecked(v.j, k))
            out.j = *q;
    }
    return out;
}

NodeHandle VarOrderIndex::shorter(const NodeHandle& v, std::size_t k) const {
    require_valid(v, "shorter");
    if (k > v.k)
        throw order_error("shorter: target order " + std::to_string(k)
                          + " exceeds the node's order " + std::to_string(v.k));
    return shorter_unchecked(v, k);
}

std::vector<NodeHandle> VarOrderIndex::longer_unchecked(const NodeHandle& v, std::size_t k) const {
    std::vector<NodeHandle> out;
    std::size_t prev = v.i - 1;
    if (v.i < v.j) {
        for (std::size_t b : lstar_.range_below(v.i, v.j - 1, k)) {
            out.push_back({prev + 1, b, k});
            prev = b;
        }
    }
    out.push_back({prev + 1, v.j, k});
    return out;
}

std::vector<NodeHandle> VarOrderIndex::longer(const NodeHandle& v, std::size_t k) const {
    require_valid(v, "longer");
    if (k < v.k || k > max_order())
        throw order_error("longer: target order " + std::to_string(k) + " outside ["
                          + std::to_string(v.k) + ", " + std::to_string(max_order()) + "]");
    return longer_unchecked(v, k);
}

std::optional<NodeHandle> VarOrderIndex::maxlen_unchecked(const NodeHandle& v,
                                                          code_type a) const noexcept {
    const WaveletTree& w = boss_.w();
    std::optional<std::size_t> row;
    auto first_in_range = [&](WaveletTree::symbol_type sym) {
        const std::size_t before = w.rank_unchecked(v.i - 1, sym);
        if (w.rank_unchecked(v.j, sym) > before) {
            const std::size_t r = w.select_unchecked(before + 1, sym);
            if (!row || r < *row)
                row = r;
        }
    };
    first_in_range(a);
    if (a != Alphabet::kTerminatorCode)
        first_in_range(static_cast<WaveletTree::symbol_type>(a + alphabet().sigma()));
    if (!row)
        return std::nullopt;
    return boss_.node_from_row_unchecked(*row);
}

std::optional<NodeHandle> VarOrderIndex::maxlen(const NodeHandle& v, std::optional<char> a) const {
    require_valid(v, "maxlen");
    if (!a)
        return boss_.node_from_row_unchecked(v.i);
    if (!alphabet().contains(*a))
        throw alphabet_error(std::string("maxlen: symbol '") + *a + "' not in alphabet");
    return maxlen_unchecked(v, alphabet().code_unchecked(*a));
}

std::optional<NodeHandle> VarOrderIndex::forward_unchecked(const NodeHandle& v,
                                                           code_type a) const {
    if (v.k == max_order())
        return boss_.forward_unchecked(v, a);
    const auto source = maxlen_unchecked(v, a);
    if (!source)
        return std::nullopt;
    const auto target = boss_.forward_unchecked(*source, a);
    if (!target)
        return std::nullopt;
    return shorter_unchecked(*target, v.k);
}

std::optional<NodeHandle> VarOrderIndex::forward(const NodeHandle& v, char a) const {
    require_valid(v, "forward");
    if (v.k == 0)
        throw order_error("forward: undefined on the order-0 node (empty label)");
    if (!alphabet().contains(a))
        throw alphabet_error(std::string("forward: symbol '") + a + "' not in alphabet");
    return forward_unchecked(v, alphabet().code_unchecked(a));
}

std::vector<NodeHandle> VarOrderIndex::backward_candidates(const NodeHandle& v) const {
    std::vector<NodeHandle> out;
    for (const NodeHandle& x : longer_unchecked(v, v.k + 1)) {
        // One predecessor per extension suffices: all of them shorten to the same node.
        const NodeHandle full = boss_.node_from_row_unchecked(x.i);
        if (const auto pred = boss_.first_predecessor(full))
            out.push_back(shorter_unchecked(*pred, v.k));
    }
    return out;
}

std::vector<NodeHandle> VarOrderIndex::backward_unchecked(const NodeHandle& v) const {
    if (v.k == max_order())
        return boss_.backward(v);
    auto out = backward_candidates(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<NodeHandle> VarOrderIndex::backward(const NodeHandle& v) const {
    require_valid(v, "backward");
    return backward_unchecked(v);
}

std::optional<char> VarOrderIndex::lastchar(const NodeHandle& v) const {
    require_valid(v, "lastchar");
    if (v.k == 0)
        return std::nullopt;
    return alphabet().symbol_unchecked(boss_.lastchar_unchecked(v.i));
}

std::string VarOrderIndex::label(const NodeHandle& v) const {
    require_valid(v, "label");
    if (v.k == 0)
        return {};
    return boss_.label(boss_.node_from_row_unchecked(v.i)).substr(max_order() - v.k);
}

std::vector<NodeHandle> VarOrderIndex::nodes(std::size_t k) const {
    if (k > max_order())
        throw order_error("nodes: order " + std::to_string(k) + " exceeds K = "
                          + std::to_string(max_order()));
    return longer_unchecked(root(), k);
}

}  // namespace vodbg
