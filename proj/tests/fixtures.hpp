#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "vodbg/edge_matrix.hpp"
#include "vodbg/var_order.hpp"

namespace fixtures {

// Nine quadruples forming a small order-3 graph used throughout the tests.
extern const std::vector<std::string> kExampleTuples;

// Its 13 sorted rows (source + edge label), $-padding included.
extern const std::vector<std::string> kExampleRows;

vodbg::EdgeMatrix example_matrix();
vodbg::VarOrderIndex example_index();

struct Corpus {
    std::vector<std::string> reads;
    std::size_t order = 0;
    bool revcomp = false;
};

std::string random_dna(std::size_t length, std::uint64_t seed);

// Reads sampled from a short random genome so that they overlap.
Corpus random_corpus(std::uint64_t seed, std::size_t min_reads, std::size_t max_reads,
                     std::size_t min_length, std::size_t max_length, std::size_t min_order,
                     std::size_t max_order);

// Genome tiled into reads of `read_length` every `step` characters.
std::vector<std::string> tile_reads(const std::string& genome, std::size_t read_length,
                                    std::size_t step);

std::string temp_path(const std::string& name);

}  // namespace fixtures
