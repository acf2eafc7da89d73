#include "vodbg/bit_vector.hpp"

#include <bit>
#include <string>

#include "vodbg/errors.hpp"

namespace vodbg {

namespace {

constexpr std::size_t kWordBits = 64;
constexpr std::size_t kWordsPerSuper = 8;
constexpr std::size_t kSuperBits = kWordBits * kWordsPerSuper;

// Position (0-based) of the r-th set bit of w, r >= 1.
inline unsigned select_in_word(std::uint64_t w, unsigned r) noexcept {
    for (unsigned k = 1; k < r; ++k)
        w &= w - 1;
    return static_cast<unsigned>(std::countr_zero(w));
}

}  // namespace

BitVector::BitVector() { build_directory(); }

BitVector::BitVector(const std::vector<bool>& bits)
      : words_((bits.size() + kWordBits - 1) / kWordBits, 0),
        size_(bits.size()) {
    for (std::size_t p = 0; p < bits.size(); ++p) {
        if (bits[p])
            words_[p / kWordBits] |= std::uint64_t{1} << (p % kWordBits);
    }
    build_directory();
}

BitVector::BitVector(std::vector<std::uint64_t> words, std::size_t n_bits)
      : words_(std::move(words)), size_(n_bits) {
    const std::size_t needed = (n_bits + kWordBits - 1) / kWordBits;
    if (words_.size() < needed)
        throw out_of_range_error("BitVector: " + std::to_string(words_.size())
                                 + " words cannot hold " + std::to_string(n_bits) + " bits");
    words_.resize(needed);
    if (n_bits % kWordBits != 0)
        words_.back() &= (std::uint64_t{1} << (n_bits % kWordBits)) - 1;
    build_directory();
}

BitVector BitVector::from_string(std::string_view bits) {
    std::vector<bool> v;
    v.reserve(bits.size());
    for (char ch : bits) {
        if (ch != '0' && ch != '1')
            throw input_error(std::string("BitVector: unexpected character '") + ch + "'");
        v.push_back(ch == '1');
    }
    return BitVector(v);
}

void BitVector::build_directory() {
    const std::size_t n_super = size_ / kSuperBits + 1;
    dir_.assign(2 * n_super, 0);
    std::size_t running = 0;
    for (std::size_t sb = 0; sb < n_super; ++sb) {
        dir_[2 * sb] = running;
        std::uint64_t packed = 0;
        std::size_t inside = 0;
        for (std::size_t t = 0; t < kWordsPerSuper; ++t) {
            if (t > 0)
                packed |= static_cast<std::uint64_t>(inside) << (9 * (t - 1));
            const std::size_t wi = sb * kWordsPerSuper + t;
            if (wi < words_.size())
                inside += static_cast<std::size_t>(std::popcount(words_[wi]));
        }
        dir_[2 * sb + 1] = packed;
        running += inside;
    }
    ones_ = running;
}

bool BitVector::access(std::size_t p) const {
    if (p == 0 || p > size_)
        throw out_of_range_error("BitVector::access: position " + std::to_string(p)
                                 + " outside [1, " + std::to_string(size_) + "]");
    return get(p);
}

std::size_t BitVector::rank1(std::size_t i) const noexcept {
    const std::size_t wi = i / kWordBits;
    const std::size_t sb = i / kSuperBits;
    std::size_t r = dir_[2 * sb] + relative_count(sb, wi % kWordsPerSuper);
    if (const std::size_t off = i % kWordBits; off != 0)
        r += static_cast<std::size_t>(
            std::popcount(words_[wi] & ((std::uint64_t{1} << off) - 1)));
    return r;
}

std::size_t BitVector::rank(std::size_t i, bool bit) const {
    if (i > size_)
        throw out_of_range_error("BitVector::rank: prefix length " + std::to_string(i)
                                 + " exceeds size " + std::to_string(size_));
    const std::size_t ones = rank1(i);
    return bit ? ones : i - ones;
}

std::size_t BitVector::superblock_count(std::size_t sb, bool bit) const noexcept {
    return bit ? dir_[2 * sb] : sb * kSuperBits - dir_[2 * sb];
}

std::size_t BitVector::select1(std::size_t j) const noexcept {
    // Largest superblock whose preceding count is < j.
    std::size_t lo = 0, hi = dir_.size() / 2;
    while (hi - lo > 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (dir_[2 * mid] < j) lo = mid; else hi = mid;
    }
    std::size_t remaining = j - dir_[2 * lo];
    std::size_t t = kWordsPerSuper - 1;
    while (t > 0 && relative_count(lo, t) >= remaining)
        --t;
    remaining -= relative_count(lo, t);
    const std::size_t wi = lo * kWordsPerSuper + t;
    return wi * kWordBits + select_in_word(words_[wi], static_cast<unsigned>(remaining)) + 1;
}

std::size_t BitVector::select0(std::size_t j) const noexcept {
    std::size_t lo = 0, hi = dir_.size() / 2;
    while (hi - lo > 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (superblock_count(mid, false) < j) lo = mid; else hi = mid;
    }
    std::size_t remaining = j - superblock_count(lo, false);
    auto zeros_before = [&](std::size_t t) { return t * kWordBits - relative_count(lo, t); };
    std::size_t t = kWordsPerSuper - 1;
    while (t > 0 && zeros_before(t) >= remaining)
        --t;
    remaining -= zeros_before(t);
    const std::size_t wi = lo * kWordsPerSuper + t;
    const std::uint64_t w = wi < words_.size() ? words_[wi] : 0;
    return wi * kWordBits + select_in_word(~w, static_cast<unsigned>(remaining)) + 1;
}

std::size_t BitVector::select(std::size_t j, bool bit) const {
    if (j == 0 || j > count(bit))
        throw not_found_error("BitVector::select: no occurrence #" + std::to_string(j)
                              + " of " + (bit ? "1" : "0") + " (count "
                              + std::to_string(count(bit)) + ")");
    return bit ? select1(j) : select0(j);
}

std::string BitVector::to_string() const {
    std::string s(size_, '0');
    for (std::size_t p = 1; p <= size_; ++p)
        if (get(p)) s[p - 1] = '1';
    return s;
}

std::size_t BitVector::bits_used() const noexcept {
    return kWordBits * (words_.size() + dir_.size()) + 2 * kWordBits;
}

}  // namespace vodbg
