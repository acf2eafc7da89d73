#include "vodbg/storage.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

#include "vodbg/errors.hpp"

namespace vodbg {

namespace {

constexpr std::size_t kMaxOrder = std::size_t{1} << 16;

std::uint8_t width_for(std::uint64_t max_value) {
    return static_cast<std::uint8_t>(std::max<int>(1, std::bit_width(max_value)));
}

class ByteWriter {
public:
    void u8(std::uint8_t v) { bytes_.push_back(static_cast<char>(v)); }
    void u64(std::uint64_t v) {
        for (int b = 0; b < 8; ++b)
            u8(static_cast<std::uint8_t>(v >> (8 * b)));
    }
    void raw(const char* data, std::size_t n) { bytes_.append(data, n); }

    void bitvector(const BitVector& bv) {
        u64(bv.size());
        for (std::uint64_t w : bv.words())
            u64(w);
    }

    template <class Values>
    void packed(const Values& values, std::uint8_t width) {
        u64(values.size());
        u8(width);
        std::vector<std::uint64_t> words((values.size() * width + 63) / 64, 0);
        std::size_t bit = 0;
        for (std::uint64_t v : values) {
            words[bit / 64] |= v << (bit % 64);
            if (bit % 64 + width > 64)
                words[bit / 64 + 1] |= v >> (64 - bit % 64);
            bit += width;
        }
        for (std::uint64_t w : words)
            u64(w);
    }

    // Appends `section` prefixed by its byte length.
    void section(const ByteWriter& section) {
        u64(section.bytes_.size());
        bytes_.append(section.bytes_);
    }

    const std::string& bytes() const noexcept { return bytes_; }

private:
    std::string bytes_;
};

class ByteReader {
public:
    ByteReader(const char* data, std::size_t size, std::string what)
          : data_(data), size_(size), what_(std::move(what)) {}

    std::uint8_t u8() {
        need(1);
        return static_cast<std::uint8_t>(data_[pos_++]);
    }
    std::uint64_t u64() {
        need(8);
        std::uint64_t v = 0;
        for (int b = 0; b < 8; ++b)
            v |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(data_[pos_ + b])) << (8 * b);
        pos_ += 8;
        return v;
    }
    std::string raw(std::size_t n) {
        need(n);
        std::string out(data_ + pos_, n);
        pos_ += n;
        return out;
    }

    ByteReader section(const char* name) {
        const std::uint64_t length = u64();
        need(length);
        ByteReader sub(data_ + pos_, length, name);
        pos_ += length;
        return sub;
    }

    BitVector bitvector() {
        const std::uint64_t n_bits = u64();
        const std::uint64_t n_words = (n_bits + 63) / 64;
        if (n_words * 8 != remaining())
            throw corruption_error(what_ + ": payload length does not match " + std::to_string(n_bits)
                                   + " bits");
        std::vector<std::uint64_t> words(n_words);
        for (auto& w : words)
            w = u64();
        return BitVector(std::move(words), n_bits);
    }

    std::vector<std::uint64_t> packed() {
        const std::uint64_t count = u64();
        const std::uint8_t width = u8();
        if (width == 0 || width > 32)
            throw corruption_error(what_ + ": bad element width " + std::to_string(width));
        const std::uint64_t n_words = (count * width + 63) / 64;
        if (n_words * 8 != remaining())
            throw corruption_error(what_ + ": payload length does not match " + std::to_string(count)
                                   + " elements");
        std::vector<std::uint64_t> words(n_words);
        for (auto& w : words)
            w = u64();
        const std::uint64_t mask = (std::uint64_t{1} << width) - 1;
        std::vector<std::uint64_t> out(count);
        std::size_t bit = 0;
        for (auto& v : out) {
            v = words[bit / 64] >> (bit % 64);
            if (bit % 64 + width > 64)
                v |= words[bit / 64 + 1] << (64 - bit % 64);
            v &= mask;
            bit += width;
        }
        return out;
    }

    std::size_t remaining() const noexcept { return size_ - pos_; }
    void expect_end() const {
        if (remaining() != 0)
            throw corruption_error(what_ + ": " + std::to_string(remaining()) + " unexpected trailing bytes");
    }

private:
    void need(std::uint64_t n) const {
        if (n > remaining())
            throw corruption_error(what_ + ": truncated (need " + std::to_string(n) + " bytes, "
                                   + std::to_string(remaining()) + " left)");
    }

    const char* data_;
    std::size_t size_;
    std::size_t pos_ = 0;
    std::string what_;
};

std::string serialize(const VarOrderIndex& index) {
    const BossIndex& boss = index.boss();
    const std::size_t k = boss.order();
    const std::size_t sigma = boss.alphabet().sigma();

    ByteWriter out;
    out.raw(kIndexMagic, sizeof kIndexMagic);
    out.u8(kIndexVersion);
    out.u64(k);
    out.u64(sigma);
    out.u64(boss.rows());
    out.u64(boss.nodes());
    out.raw(boss.alphabet().symbols().data(), sigma);

    ByteWriter last, flags, w, counts, lstar;
    last.bitvector(boss.last());
    flags.bitvector(boss.flags());
    w.packed(boss.labels(), width_for(sigma));
    for (std::size_t c : boss.counts())
        counts.u64(c);
    lstar.packed(index.lstar().to_vector(), width_for(k));

    out.section(last);
    out.section(flags);
    out.section(w);
    out.section(counts);
    out.section(lstar);
    return out.bytes();
}

VarOrderIndex deserialize(const std::string& bytes) {
    if (bytes.size() < sizeof kIndexMagic
        || std::memcmp(bytes.data(), kIndexMagic, sizeof kIndexMagic) != 0)
        throw format_error("not an index file (bad magic)");
    ByteReader in(bytes.data() + sizeof kIndexMagic, bytes.size() - sizeof kIndexMagic, "header");
    const std::uint8_t version = in.u8();
    if (version != kIndexVersion)
        throw version_error("unsupported index format version " + std::to_string(version)
                            + " (expected " + std::to_string(kIndexVersion) + ")");
    const std::uint64_t k = in.u64();
    const std::uint64_t sigma = in.u64();
    const std::uint64_t n_rows = in.u64();
    const std::uint64_t n_nodes = in.u64();
    if (k == 0 || k > kMaxOrder)
        throw corruption_error("header: order K = " + std::to_string(k) + " out of range");
    if (sigma == 0 || sigma > 126)
        throw corruption_error("header: alphabet size " + std::to_string(sigma) + " out of range");
    const std::string symbols = in.raw(sigma);

    ByteReader last_in = in.section("L");
    ByteReader flags_in = in.section("flags");
    ByteReader w_in = in.section("W");
    ByteReader counts_in = in.section("C");
    ByteReader lstar_in = in.section("L*");
    in.expect_end();

    BitVector last = last_in.bitvector();
    BitVector flags = flags_in.bitvector();
    const auto w_values = w_in.packed();
    std::vector<std::size_t> counts(sigma + 2);
    for (auto& c : counts)
        c = counts_in.u64();
    counts_in.expect_end();
    const auto lstar_values = lstar_in.packed();

    if (last.size() != n_rows || flags.size() != n_rows || w_values.size() != n_rows)
        throw corruption_error("section lengths disagree with n_rows = " + std::to_string(n_rows));
    if (last.count(true) != n_nodes)
        throw corruption_error("L marks " + std::to_string(last.count(true)) + " nodes, header says "
                               + std::to_string(n_nodes));
    if (lstar_values.size() + 1 != n_rows)
        throw corruption_error("L* has " + std::to_string(lstar_values.size())
                               + " entries, expected n_rows - 1");

    std::vector<code_type> labels(n_rows);
    for (std::size_t r = 0; r < n_rows; ++r) {
        if (w_values[r] > sigma)
            throw corruption_error("W: label code out of range at row " + std::to_string(r + 1));
        labels[r] = static_cast<code_type>(w_values[r]);
    }
    std::vector<WaveletTree::symbol_type> lstar(lstar_values.size());
    for (std::size_t p = 0; p < lstar.size(); ++p) {
        if (lstar_values[p] > k)
            throw corruption_error("L*: value out of range at position " + std::to_string(p + 1));
        lstar[p] = static_cast<WaveletTree::symbol_type>(lstar_values[p]);
    }
    // L* must agree with L on which boundaries are node boundaries.
    for (std::size_t p = 1; p < n_rows; ++p)
        if ((lstar[p - 1] == k) == last.get(p))
            throw corruption_error("L* disagrees with L at position " + std::to_string(p));

    try {
        BossIndex boss(k, Alphabet(symbols), labels, std::move(flags), std::move(last),
                       std::move(counts));
        WaveletTree lstar_tree(lstar, static_cast<WaveletTree::symbol_type>(k + 1));
        return VarOrderIndex(std::move(boss), std::move(lstar_tree));
    } catch (const storage_error&) {
        throw;
    } catch (const error& e) {
        throw corruption_error(std::string("inconsistent index: ") + e.what());
    }
}

}  // namespace

std::size_t save(const VarOrderIndex& index, std::ostream& sink) {
    const std::string bytes = serialize(index);
    sink.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    sink.flush();
    if (!sink)
        throw io_error("failed to write " + std::to_string(bytes.size()) + " bytes");
    return bytes.size();
}

void save_file(const VarOrderIndex& index, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw io_error("cannot open '" + path + "' for writing");
    save(index, out);
}

VarOrderIndex load(std::istream& source) {
    std::string bytes((std::istreambuf_iterator<char>(source)), std::istreambuf_iterator<char>());
    if (source.bad())
        throw io_error("read failure");
    return deserialize(bytes);
}

VarOrderIndex load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io_error("cannot open '" + path + "' for reading");
    return load(in);
}

}  // namespace vodbg
