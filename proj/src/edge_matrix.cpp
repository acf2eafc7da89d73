#include "vodbg/edge_matrix.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_set>

#include "vodbg/errors.hpp"

namespace vodbg {

namespace {

// Compact the buffered k-mers once they exceed this many bytes.
constexpr std::size_t kCompactThreshold = std::size_t{1} << 26;

/**
 * Stable LSD radix sort of fixed-width rows into colex order: the edge label
 * (last column) is the least significant key, then source columns from the
 * first to the last.
 */
std::vector<std::size_t> colex_permutation(const std::string& codes, std::size_t width) {
    const std::size_t n = codes.size() / width;
    std::vector<std::size_t> order(n), scratch(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<code_type> keys(n);
    std::array<std::size_t, 257> count{};

    auto pass = [&](std::size_t column) {
        count.fill(0);
        for (std::size_t t = 0; t < n; ++t) {
            keys[t] = static_cast<code_type>(codes[order[t] * width + column]);
            ++count[keys[t] + 1];
        }
        if (std::any_of(count.begin() + 1, count.end(), [n](std::size_t c) { return c == n; }))
            return;  // single bucket: pass is the identity
        for (std::size_t b = 1; b < count.size(); ++b)
            count[b] += count[b - 1];
        for (std::size_t t = 0; t < n; ++t)
            scratch[count[keys[t]]++] = order[t];
        order.swap(scratch);
    };

    pass(width - 1);
    for (std::size_t column = 0; column + 1 < width; ++column)
        pass(column);
    return order;
}

// Rows of `codes` in colex order with duplicates removed.
std::string sorted_unique(const std::string& codes, std::size_t width) {
    const auto order = colex_permutation(codes, width);
    std::string out;
    out.reserve(codes.size());
    for (std::size_t idx : order) {
        const std::string_view row = std::string_view(codes).substr(idx * width, width);
        if (!out.empty() && out.compare(out.size() - width, width, row) == 0)
            continue;
        out.append(row);
    }
    return out;
}

bool all_terminators(std::string_view codes) noexcept {
    return std::all_of(codes.begin(), codes.end(),
                       [](char c) { return c == Alphabet::kTerminatorCode; });
}

}  // namespace

int colex_compare(std::string_view a, std::string_view b) noexcept {
    const std::size_t k = a.size() - 1;
    for (std::size_t p = k; p-- > 0;) {
        if (a[p] != b[p])
            return static_cast<code_type>(a[p]) < static_cast<code_type>(b[p]) ? -1 : 1;
    }
    if (a[k] != b[k])
        return static_cast<code_type>(a[k]) < static_cast<code_type>(b[k]) ? -1 : 1;
    return 0;
}

EdgeMatrix::EdgeMatrix(std::size_t order, Alphabet alphabet)
      : order_(order), alphabet_(std::move(alphabet)) {
    if (order == 0)
        throw order_error("order K must be at least 1");
}

void EdgeMatrix::push_codes(std::string_view codes) {
    if (codes.size() != width())
        throw input_error("tuple of length " + std::to_string(codes.size()) + ", expected "
                          + std::to_string(width()));
    codes_.append(codes);
}

void EdgeMatrix::push_tuple(std::string_view tuple) {
    if (tuple.size() != width())
        throw input_error("tuple '" + std::string(tuple) + "' has length "
                          + std::to_string(tuple.size()) + ", expected " + std::to_string(width()));
    std::string codes(tuple.size(), '\0');
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (!alphabet_.contains(tuple[i]))
            throw input_error("tuple '" + std::string(tuple) + "', position " + std::to_string(i + 1)
                              + ": symbol '" + tuple[i] + "' not in alphabet");
        codes[i] = static_cast<char>(alphabet_.code_unchecked(tuple[i]));
    }
    codes_.append(codes);
}

std::vector<std::string> EdgeMatrix::to_strings() const {
    std::vector<std::string> out;
    out.reserve(rows());
    for (std::size_t r = 1; r <= rows(); ++r)
        out.push_back(tuple_string(r));
    return out;
}

bool EdgeMatrix::is_colex_sorted() const noexcept {
    for (std::size_t r = 2; r <= rows(); ++r)
        if (colex_compare(row(r - 1), row(r)) >= 0)
            return false;
    return true;
}

EdgeMatrix extract_edges(std::span<const std::string> reads, std::size_t order, bool revcomp,
                         const Alphabet& alphabet) {
    EdgeMatrix out(order, alphabet);
    if (revcomp && !alphabet.has_complement())
        throw input_error("reverse complements need a complemented alphabet such as ACGT");
    const std::size_t width = order + 1;
    std::string& buffer = out.mutable_codes();
    std::string encoded, reversed;

    for (std::size_t r = 0; r < reads.size(); ++r) {
        const std::string& read = reads[r];
        encoded.resize(read.size());
        for (std::size_t p = 0; p < read.size(); ++p) {
            const code_type c = alphabet.code_unchecked(read[p]);
            if (c == Alphabet::kInvalid || c == Alphabet::kTerminatorCode)
                throw input_error("read " + std::to_string(r + 1) + ", position "
                                  + std::to_string(p + 1) + ": symbol '" + read[p]
                                  + "' not in alphabet " + alphabet.symbols());
            encoded[p] = static_cast<char>(c);
        }
        if (read.size() < width)
            continue;
        for (std::size_t p = 0; p + width <= encoded.size(); ++p)
            buffer.append(encoded, p, width);
        if (revcomp) {
            reversed.assign(encoded.rbegin(), encoded.rend());
            for (char& c : reversed)
                c = static_cast<char>(alphabet.complement(static_cast<code_type>(c)));
            for (std::size_t p = 0; p + width <= reversed.size(); ++p)
                buffer.append(reversed, p, width);
        }
        if (buffer.size() > kCompactThreshold)
            buffer = sorted_unique(buffer, width);
    }
    buffer = sorted_unique(buffer, width);
    return out;
}

EdgeMatrix add_dummies(const EdgeMatrix& edges) {
    const std::size_t k = edges.order();
    EdgeMatrix out = edges;
    std::unordered_set<std::string_view> sources, targets;
    sources.reserve(edges.rows());
    targets.reserve(edges.rows());
    for (std::size_t r = 1; r <= edges.rows(); ++r) {
        sources.insert(edges.source(r));
        if (edges.edge_label(r) != Alphabet::kTerminatorCode)
            targets.insert(edges.target(r));
    }

    // Owns the strings behind the views added to `targets`.
    std::unordered_set<std::string> chain_targets;
    std::string tuple(k + 1, '\0');

    // Incoming closure: walk $-prefixed chains back until reaching a source
    // that already has a predecessor or the all-$ root.
    std::vector<std::string_view> unreached;
    for (std::string_view s : sources)
        if (!all_terminators(s) && !targets.contains(s))
            unreached.push_back(s);
    std::sort(unreached.begin(), unreached.end());
    for (std::string_view s : unreached) {
        std::string cur(s);
        while (!all_terminators(cur) && !targets.contains(cur)) {
            tuple[0] = static_cast<char>(Alphabet::kTerminatorCode);
            std::copy(cur.begin(), cur.end(), tuple.begin() + 1);
            out.push_codes(tuple);
            auto [it, inserted] = chain_targets.insert(cur);
            targets.insert(*it);
            cur = tuple.substr(0, k);
        }
    }

    // Outgoing closure: every target needs some row starting with it.
    std::vector<std::string_view> dead_ends;
    for (std::size_t r = 1; r <= edges.rows(); ++r) {
        if (edges.edge_label(r) == Alphabet::kTerminatorCode)
            continue;
        const std::string_view t = edges.target(r);
        if (!sources.contains(t))
            dead_ends.push_back(t);
    }
    std::sort(dead_ends.begin(), dead_ends.end());
    dead_ends.erase(std::unique(dead_ends.begin(), dead_ends.end()), dead_ends.end());
    for (std::string_view t : dead_ends) {
        std::copy(t.begin(), t.end(), tuple.begin());
        tuple[k] = static_cast<char>(Alphabet::kTerminatorCode);
        out.push_codes(tuple);
    }
    return out;
}

EdgeMatrix sort_edges(const EdgeMatrix& rows) {
    EdgeMatrix out(rows.order(), rows.alphabet());
    out.mutable_codes() = sorted_unique(rows.codes(), rows.width());
    return out;
}

bool is_dummy_closed(const EdgeMatrix& matrix) {
    std::unordered_set<std::string_view> sources, targets;
    for (std::size_t r = 1; r <= matrix.rows(); ++r) {
        sources.insert(matrix.source(r));
        if (matrix.edge_label(r) != Alphabet::kTerminatorCode)
            targets.insert(matrix.target(r));
    }
    for (std::string_view s : sources)
        if (!all_terminators(s) && !targets.contains(s))
            return false;
    for (std::string_view t : targets)
        if (!sources.contains(t))
            return false;
    return true;
}

EdgeMatrix build_matrix(std::span<const std::string> reads, std::size_t order, bool revcomp,
                        const Alphabet& alphabet) {
    return sort_edges(add_dummies(extract_edges(reads, order, revcomp, alphabet)));
}

}  // namespace vodbg
