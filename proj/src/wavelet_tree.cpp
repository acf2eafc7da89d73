#include "vodbg/wavelet_tree.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "vodbg/errors.hpp"

namespace vodbg {

WaveletTree::WaveletTree(std::span<const symbol_type> symbols, symbol_type sigma)
      : size_(symbols.size()), sigma_(sigma) {
    if (sigma == 0)
        throw alphabet_error("WaveletTree: alphabet must contain at least one symbol");
    const std::size_t height =
        std::max<std::size_t>(1, std::bit_width(static_cast<std::uint64_t>(sigma - 1)));
    const std::size_t n_values = std::size_t{1} << height;

    offsets_.assign(n_values + 1, 0);
    for (std::size_t p = 0; p < symbols.size(); ++p) {
        if (symbols[p] >= sigma)
            throw alphabet_error("WaveletTree: symbol " + std::to_string(symbols[p])
                                 + " at position " + std::to_string(p + 1)
                                 + " outside alphabet of size " + std::to_string(sigma));
        ++offsets_[symbols[p] + 1];
    }
    for (std::size_t v = 1; v <= n_values; ++v)
        offsets_[v] += offsets_[v - 1];

    // Level l holds the sequence stably sorted by its top l bits.
    std::vector<symbol_type> cur(symbols.begin(), symbols.end());
    std::vector<symbol_type> next(cur.size());
    levels_.reserve(height);
    for (std::size_t l = 0; l < height; ++l) {
        const std::size_t shift = height - 1 - l;
        std::vector<bool> bits(cur.size());
        for (std::size_t x = 0; x < cur.size(); ++x)
            bits[x] = (cur[x] >> shift) & 1U;
        levels_.emplace_back(bits);

        if (l + 1 == height)
            break;
        std::vector<std::size_t> bucket_start(std::size_t{1} << (l + 1), 0);
        for (std::size_t b = 0; b < bucket_start.size(); ++b)
            bucket_start[b] = offsets_[b << shift];
        for (symbol_type s : cur)
            next[bucket_start[s >> shift]++] = s;
        cur.swap(next);
    }
}

std::size_t WaveletTree::first_of(std::uint64_t value) const noexcept {
    return offsets_[std::min<std::uint64_t>(value, offsets_.size() - 1)];
}

WaveletTree::Node WaveletTree::child(const Node& v, bool bit) const noexcept {
    Node c{v.level + 1, v.prefix * 2 + (bit ? 1 : 0), 0, 0};
    c.start = first_of(min_value(c));
    c.size = first_of(max_value(c) + 1) - c.start;
    return c;
}

std::size_t WaveletTree::descend(const Node& v, std::size_t x, bool bit) const noexcept {
    const BitVector& bv = levels_[v.level];
    return bit ? bv.rank1(v.start + x) - bv.rank1(v.start)
               : bv.rank0(v.start + x) - bv.rank0(v.start);
}

std::size_t WaveletTree::lift(const Node& v, std::size_t x) const noexcept {
    std::uint64_t prefix = v.prefix;
    for (std::size_t l = v.level; l > 0; --l) {
        const bool bit = prefix & 1U;
        prefix >>= 1;
        const std::size_t parent_start = first_of(prefix << (height() - l + 1));
        const BitVector& bv = levels_[l - 1];
        x = (bit ? bv.select1(bv.rank1(parent_start) + x)
                 : bv.select0(bv.rank0(parent_start) + x))
            - parent_start;
    }
    return x;
}

WaveletTree::symbol_type WaveletTree::get(std::size_t p) const noexcept {
    Node v = root();
    std::size_t x = p - 1;
    while (v.level < height()) {
        const bool bit = levels_[v.level].get(v.start + x + 1);
        x = descend(v, x, bit);
        v = child(v, bit);
    }
    return static_cast<symbol_type>(v.prefix);
}

WaveletTree::symbol_type WaveletTree::access(std::size_t p) const {
    if (p == 0 || p > size_)
        throw out_of_range_error("WaveletTree::access: position " + std::to_string(p)
                                 + " outside [1, " + std::to_string(size_) + "]");
    return get(p);
}

std::size_t WaveletTree::rank_unchecked(std::size_t i, symbol_type c) const noexcept {
    std::size_t x = i;
    std::size_t start = 0;
    const std::size_t h = height();
    for (std::size_t l = 0; l < h && x > 0; ++l) {
        const std::size_t shift = h - 1 - l;
        const bool bit = (c >> shift) & 1U;
        const BitVector& bv = levels_[l];
        x = bit ? bv.rank1(start + x) - bv.rank1(start) : bv.rank0(start + x) - bv.rank0(start);
        start = first_of((static_cast<std::uint64_t>(c) >> shift) << shift);
    }
    return x;
}

std::size_t WaveletTree::rank(std::size_t i, symbol_type c) const {
    if (c >= sigma_)
        throw alphabet_error("WaveletTree::rank: symbol " + std::to_string(c)
                             + " outside alphabet of size " + std::to_string(sigma_));
    if (i > size_)
        throw out_of_range_error("WaveletTree::rank: prefix length " + std::to_string(i)
                                 + " exceeds size " + std::to_string(size_));
    return rank_unchecked(i, c);
}

std::size_t WaveletTree::select_unchecked(std::size_t j, symbol_type c) const noexcept {
    const Node leaf{height(), c, first_of(c), first_of(std::uint64_t{c} + 1) - first_of(c)};
    return lift(leaf, j);
}

std::size_t WaveletTree::select(std::size_t j, symbol_type c) const {
    if (c >= sigma_)
        throw alphabet_error("WaveletTree::select: symbol " + std::to_string(c)
                             + " outside alphabet of size " + std::to_string(sigma_));
    const std::size_t occ = first_of(std::uint64_t{c} + 1) - first_of(c);
    if (j == 0 || j > occ)
        throw not_found_error("WaveletTree::select: no occurrence #" + std::to_string(j)
                              + " of symbol " + std::to_string(c) + " (count "
                              + std::to_string(occ) + ")");
    return select_unchecked(j, c);
}

std::optional<std::size_t>
WaveletTree::prev_below_in(const Node& v, std::size_t x, std::uint64_t k) const {
    if (x == 0 || min_value(v) >= k)
        return std::nullopt;
    if (max_value(v) < k)
        return lift(v, x);
    const std::size_t x0 = descend(v, x, false);
    auto left = prev_below_in(child(v, false), x0, k);
    auto right = prev_below_in(child(v, true), x - x0, k);
    if (left && right)
        return std::max(*left, *right);
    return left ? left : right;
}

std::optional<std::size_t>
WaveletTree::next_below_in(const Node& v, std::size_t x, std::uint64_t k) const {
    if (x >= v.size || min_value(v) >= k)
        return std::nullopt;
    if (max_value(v) < k)
        return lift(v, x + 1);
    const std::size_t x0 = descend(v, x, false);
    auto left = next_below_in(child(v, false), x0, k);
    auto right = next_below_in(child(v, true), x - x0, k);
    if (left && right)
        return std::min(*left, *right);
    return left ? left : right;
}

void WaveletTree::range_below_in(const Node& v, std::size_t a, std::size_t b, std::uint64_t k,
                                 std::vector<std::size_t>& out) const {
    if (a >= b || min_value(v) >= k)
        return;
    if (max_value(v) < k) {
        for (std::size_t t = a + 1; t <= b; ++t)
            out.push_back(lift(v, t));
        return;
    }
    range_below_in(child(v, false), descend(v, a, false), descend(v, b, false), k, out);
    range_below_in(child(v, true), descend(v, a, true), descend(v, b, true), k, out);
}

std::optional<std::size_t> WaveletTree::prev_below_unchecked(std::size_t i, std::uint64_t k) const {
    return prev_below_in(root(), i, k);
}

std::optional<std::size_t> WaveletTree::next_below_unchecked(std::size_t j, std::uint64_t k) const {
    return next_below_in(root(), j - 1, k);
}

std::optional<std::size_t> WaveletTree::prev_below(std::size_t i, std::uint64_t k) const {
    if (i == 0 || i > size_)
        throw out_of_range_error("WaveletTree::prev_below: position " + std::to_string(i)
                                 + " outside [1, " + std::to_string(size_) + "]");
    return prev_below_unchecked(i, k);
}

std::optional<std::size_t> WaveletTree::next_below(std::size_t j, std::uint64_t k) const {
    if (j == 0 || j > size_)
        throw out_of_range_error("WaveletTree::next_below: position " + std::to_string(j)
                                 + " outside [1, " + std::to_string(size_) + "]");
    return next_below_unchecked(j, k);
}

std::vector<std::size_t>
WaveletTree::range_below(std::size_t lo, std::size_t hi, std::uint64_t k) const {
    std::vector<std::size_t> out;
    if (lo > hi)
        return out;
    if (lo == 0 || hi > size_)
        throw out_of_range_error("WaveletTree::range_below: range [" + std::to_string(lo) + ", "
                                 + std::to_string(hi) + "] outside [1, "
                                 + std::to_string(size_) + "]");
    range_below_in(root(), lo - 1, hi, k, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<WaveletTree::symbol_type> WaveletTree::to_vector() const {
    std::vector<symbol_type> out(size_);
    for (std::size_t p = 1; p <= size_; ++p)
        out[p - 1] = get(p);
    return out;
}

std::size_t WaveletTree::bits_used() const noexcept {
    std::size_t bits = 64 * (offsets_.size() + 2);
    for (const BitVector& bv : levels_)
        bits += bv.bits_used();
    return bits;
}

}  // namespace vodbg
