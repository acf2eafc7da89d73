#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "vodbg/edge_matrix.hpp"
#include "vodbg/errors.hpp"
#include "vodbg/read_input.hpp"

using namespace vodbg;

namespace {

std::set<std::string> as_set(const EdgeMatrix& m) {
    const auto v = m.to_strings();
    return {v.begin(), v.end()};
}

EdgeMatrix from_tuples(std::size_t k, const std::vector<std::string>& tuples) {
    EdgeMatrix m(k);
    for (const auto& t : tuples)
        m.push_tuple(t);
    return m;
}

}  // namespace

TEST_CASE("extract_edges slides a (K+1)-window over each read") {
    const std::vector<std::string> one = {"CGACGT"};
    CHECK(as_set(extract_edges(one, 3)) == std::set<std::string>{"CGAC", "GACG", "ACGT"});

    const std::vector<std::string> tiny = {"AC"};
    CHECK(extract_edges(tiny, 3).empty());

    // ACGT is its own reverse complement
    const std::vector<std::string> palin = {"ACGT"};
    CHECK(as_set(extract_edges(palin, 3, true)) == std::set<std::string>{"ACGT"});

    const std::vector<std::string> fwd = {"AACG"};
    CHECK(as_set(extract_edges(fwd, 3, true)) == std::set<std::string>{"AACG", "CGTT"});

    const std::vector<std::string> dup = {"ACGTA", "ACGTA", "CGTA"};
    CHECK(extract_edges(dup, 3).rows() == 2);
}

TEST_CASE("extract_edges rejects foreign symbols with read and position") {
    const std::vector<std::string> reads = {"ACGT", "ACNGT"};
    try {
        extract_edges(reads, 2);
        FAIL("expected input_error");
    } catch (const input_error& e) {
        const std::string what = e.what();
        CHECK(what.find("read 2") != std::string::npos);
        CHECK(what.find("position 3") != std::string::npos);
    }
    const std::vector<std::string> dollar = {"AC$GT"};
    CHECK_THROWS_AS(extract_edges(dollar, 2), input_error);
    CHECK(split_at_unknown({"ACNGTTN", "NN"}) == std::vector<std::string>{"AC", "GTT"});
}

TEST_CASE("add_dummies closes the example quadruples") {
    const EdgeMatrix with = add_dummies(from_tuples(3, fixtures::kExampleTuples));
    CHECK(with.rows() == 13);
    std::set<std::string> expected(fixtures::kExampleTuples.begin(), fixtures::kExampleTuples.end());
    expected.insert({"$$$T", "$$TA", "$TAC", "ACT$"});
    CHECK(as_set(with) == expected);
}

TEST_CASE("add_dummies on single-edge inputs") {
    CHECK(as_set(add_dummies(from_tuples(3, {"ACGT"})))
          == std::set<std::string>{"$$$A", "$$AC", "$ACG", "ACGT", "CGT$"});
    // AAA already has an incoming edge (the loop itself), so nothing is added.
    CHECK(as_set(add_dummies(from_tuples(3, {"AAAA"}))) == std::set<std::string>{"AAAA"});
}

TEST_CASE("sort_edges yields colex order") {
    const EdgeMatrix sorted = fixtures::example_matrix();
    CHECK(sorted.to_strings() == fixtures::kExampleRows);
    CHECK(sorted.is_colex_sorted());
    CHECK(is_dummy_closed(sorted));

    const std::vector<std::string> sources = {"$$$", "CGA", "$TA", "GAC", "GAC", "TAC", "GTC",
                                              "ACG", "ACG", "TCG", "$$T", "ACT", "CGT"};
    for (std::size_t r = 1; r <= sorted.rows(); ++r)
        CHECK(sorted.source_string(r) == sources[r - 1]);

    CHECK(sort_edges(from_tuples(3, {"GACT", "GACG"})).to_strings()
          == std::vector<std::string>{"GACG", "GACT"});
    CHECK(sort_edges(from_tuples(3, {"ACGT"})).to_strings() == std::vector<std::string>{"ACGT"});
    CHECK(sort_edges(from_tuples(3, {"ACGT", "ACGT"})).rows() == 1);
}

TEST_CASE("radix sort agrees with a comparison sort") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t k = 1 + rng() % 9;
        EdgeMatrix m(k);
        std::vector<std::string> rows;
        const std::size_t n = 1 + rng() % 300;
        for (std::size_t r = 0; r < n; ++r) {
            std::string t;
            for (std::size_t c = 0; c <= k; ++c)
                t += "$ACGT"[rng() % 5];
            m.push_tuple(t);
            rows.push_back(t);
        }
        // colex: source reversed, then edge label; '$' < A < C < G < T in ASCII too
        auto key = [k](const std::string& t) {
            std::string s(t.rbegin() + 1, t.rend());
            return s + t.back();
        };
        std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
        rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
        CHECK(sort_edges(m).to_strings() == rows);
    }
}

TEST_CASE("kmers input and order validation") {
    CHECK_THROWS_AS(EdgeMatrix(0), order_error);
    std::istringstream bad("ACGT\nACG\n");
    CHECK_THROWS_AS(read_kmers(bad, 3), input_error);
    std::istringstream good("TCGA\nCGAC\n\nCGAC\n");
    CHECK(read_kmers(good, 3).to_strings() == std::vector<std::string>{"CGAC", "TCGA"});
    CHECK(parse_input_format("fasta") == InputFormat::fasta);
    CHECK_THROWS_AS(parse_input_format("bam"), input_error);

    std::istringstream fasta(">r1 desc\nACG\nTT\n>r2\n\nGGA\n");
    CHECK(read_fasta(fasta) == std::vector<std::string>{"ACGTT", "GGA"});
}
