#include "doctest.h"

#include <sstream>

#include "fixtures.hpp"
#include "vodbg/errors.hpp"
#include "vodbg/storage.hpp"

using namespace vodbg;

namespace {

std::string to_bytes(const VarOrderIndex& vi) {
    std::ostringstream out;
    save(vi, out);
    return out.str();
}

VarOrderIndex from_bytes(const std::string& bytes) {
    std::istringstream in(bytes);
    return load(in);
}

}  // namespace

TEST_CASE("header layout") {
    const std::string bytes = to_bytes(fixtures::example_index());
    REQUIRE(bytes.size() > 14);
    CHECK(bytes.substr(0, 5) == "VODBG");
    CHECK(bytes[5] == 1);
    CHECK(bytes.substr(6, 8) == std::string("\x03\0\0\0\0\0\0\0", 8));
}

TEST_CASE("save is deterministic and load restores the index") {
    const VarOrderIndex vi = fixtures::example_index();
    const std::string a = to_bytes(vi);
    CHECK(a == to_bytes(vi));
    std::ostringstream sink;
    CHECK(save(vi, sink) == a.size());

    const VarOrderIndex back = from_bytes(a);
    CHECK(to_bytes(back) == a);
    const GraphStats s = vi.boss().stats();
    const GraphStats t = back.boss().stats();
    CHECK(s.n_rows == t.n_rows);
    CHECK(s.n_nodes == t.n_nodes);
    CHECK(s.order == t.order);
    CHECK(s.bits_total() == t.bits_total());
    CHECK(back.boss().w_string() == "TCCGTGGATAA$C");
    CHECK(back.boss().flags() == vi.boss().flags());
    CHECK(back.lstar().to_vector() == vi.lstar().to_vector());
    CHECK(back.forward({8, 9, 3}, 'A') == NodeHandle{2, 2, 3});
}

TEST_CASE("random indexes round-trip") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto corpus = fixtures::random_corpus(seed, 20, 80, 20, 60, 4, 12);
        const VarOrderIndex vi = build_index(build_matrix(corpus.reads, corpus.order, corpus.revcomp));
        const std::string bytes = to_bytes(vi);
        const VarOrderIndex back = from_bytes(bytes);
        CHECK(to_bytes(back) == bytes);
        CHECK(back.nodes(corpus.order / 2) == vi.nodes(corpus.order / 2));
    }
}

TEST_CASE("damaged files are refused") {
    const std::string good = to_bytes(fixtures::example_index());
    CHECK_THROWS_AS(from_bytes("XXXX"), format_error);
    CHECK_THROWS_AS(from_bytes(""), format_error);

    std::string version = good;
    version[5] = 2;
    CHECK_THROWS_AS(from_bytes(version), version_error);

    for (std::size_t cut : {std::size_t{6}, std::size_t{20}, good.size() / 2, good.size() - 1})
        CHECK_THROWS_AS(from_bytes(good.substr(0, cut)), corruption_error);
    CHECK_THROWS_AS(from_bytes(good + "x"), corruption_error);

    // flip an L bit: L and the suffix-length column then disagree
    std::string flipped = good;
    const std::size_t l_payload = 5 + 1 + 4 * 8 + 4 + 8 + 8;
    flipped[l_payload] = static_cast<char>(flipped[l_payload] ^ 0x08);
    CHECK_THROWS_AS(from_bytes(flipped), corruption_error);

    // every error derives from storage_error
    CHECK_THROWS_AS(from_bytes(version), storage_error);
}

TEST_CASE("file helpers") {
    const std::string path = fixtures::temp_path("storage.vdbg");
    save_file(fixtures::example_index(), path);
    CHECK(load_file(path).rows() == 13);
    CHECK_THROWS_AS(load_file(path + ".missing"), io_error);
    CHECK_THROWS_AS(save_file(fixtures::example_index(), "/nonexistent-dir/x.vdbg"), io_error);
}
