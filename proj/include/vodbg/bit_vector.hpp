#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace vodbg {

/**
 * Static bitvector with constant-time rank and logarithmic-time select.
 *
 * Positions are 1-based: access(p) for 1 <= p <= size(). rank(i, b) counts
 * occurrences of b among positions 1..i, so rank(0, b) == 0. select(j, b)
 * returns the position of the j-th b.
 *
 * The rank directory is a two-level layout over 512-bit superblocks: one
 * absolute 64-bit count per superblock plus seven packed 9-bit relative
 * counts, i.e. 25% on top of the payload. select binary-searches the
 * superblock counts and needs no extra samples.
 */
class BitVector {
public:
    BitVector();
    explicit BitVector(const std::vector<bool>& bits);
    BitVector(std::vector<std::uint64_t> words, std::size_t n_bits);

    // "1011..." (characters other than '0'/'1' are rejected).
    static BitVector from_string(std::string_view bits);

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    bool access(std::size_t p) const;
    bool operator[](std::size_t p) const { return access(p); }

    std::size_t rank(std::size_t i, bool bit) const;
    std::size_t select(std::size_t j, bool bit) const;
    std::size_t count(bool bit) const noexcept {
        return bit ? ones_ : size_ - ones_;
    }

    // Unchecked variants for the hot paths of the wavelet tree and graph
    // navigation; same 1-based contract, caller guarantees the range.
    std::size_t rank1(std::size_t i) const noexcept;
    std::size_t rank0(std::size_t i) const noexcept { return i - rank1(i); }
    std::size_t select1(std::size_t j) const noexcept;
    std::size_t select0(std::size_t j) const noexcept;
    bool get(std::size_t p) const noexcept {
        return (words_[(p - 1) >> 6] >> ((p - 1) & 63)) & 1U;
    }

    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::string to_string() const;

    // Payload plus rank directory, in bits.
    std::size_t bits_used() const noexcept;

    friend bool operator==(const BitVector& a, const BitVector& b) {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

private:
    void build_directory();
    std::size_t superblock_count(std::size_t sb, bool bit) const noexcept;
    std::size_t relative_count(std::size_t sb, std::size_t w) const noexcept {
        // Slot 0 is implicitly zero.
        return w == 0 ? 0 : (dir_[2 * sb + 1] >> (9 * (w - 1))) & 0x1FF;
    }

    std::vector<std::uint64_t> words_;
    std::vector<std::uint64_t> dir_;  // (absolute rank1, packed relative) per superblock
    std::size_t size_ = 0;
    std::size_t ones_ = 0;
};

}  // namespace vodbg
