#include "fixtures.hpp"

#include <filesystem>
#include <random>

namespace fixtures {

const std::vector<std::string> kExampleTuples = {"CGAC", "GACG", "GACT", "TACG", "GTCG",
                                                 "ACGA", "ACGT", "TCGA", "CGTC"};

const std::vector<std::string> kExampleRows = {"$$$T", "CGAC", "$TAC", "GACG", "GACT",
                                               "TACG", "GTCG", "ACGA", "ACGT", "TCGA",
                                               "$$TA", "ACT$", "CGTC"};

vodbg::EdgeMatrix example_matrix() {
    vodbg::EdgeMatrix edges(3);
    for (const auto& t : kExampleTuples)
        edges.push_tuple(t);
    return vodbg::sort_edges(vodbg::add_dummies(edges));
}

vodbg::VarOrderIndex example_index() { return vodbg::build_index(example_matrix()); }

std::string random_dna(std::size_t length, std::uint64_t seed) {
    static constexpr char kBases[] = "ACGT";
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> base(0, 3);
    std::string s(length, 'A');
    for (char& c : s)
        c = kBases[base(rng)];
    return s;
}

Corpus random_corpus(std::uint64_t seed, std::size_t min_reads, std::size_t max_reads,
                     std::size_t min_length, std::size_t max_length, std::size_t min_order,
                     std::size_t max_order) {
    std::mt19937_64 rng(seed);
    auto pick = [&](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    Corpus c;
    c.order = pick(min_order, max_order);
    c.revcomp = pick(0, 1) == 1;
    const std::size_t n_reads = pick(min_reads, max_reads);
    // A small genome makes reads share k-mers, so low orders branch.
    const std::string genome = random_dna(pick(max_length, 4 * max_length), rng());
    for (std::size_t r = 0; r < n_reads; ++r) {
        const std::size_t len = pick(min_length, max_length);
        const std::size_t start = pick(0, genome.size() - len);
        std::string read = genome.substr(start, len);
        // occasional substitution
        if (pick(0, 3) == 0)
            read[pick(0, len - 1)] = "ACGT"[pick(0, 3)];
        c.reads.push_back(std::move(read));
    }
    return c;
}

std::vector<std::string> tile_reads(const std::string& genome, std::size_t read_length,
                                    std::size_t step) {
    std::vector<std::string> reads;
    for (std::size_t p = 0; p + read_length <= genome.size(); p += step)
        reads.push_back(genome.substr(p, read_length));
    return reads;
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("vodbg_test_" + name)).string();
}

}  // namespace fixtures
