#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vodbg/alphabet.hpp"
#include "vodbg/edge_matrix.hpp"

namespace vodbg {

enum class InputFormat { fasta, reads, kmers };

InputFormat parse_input_format(const std::string& name);

// One read per record; description lines ('>' or ';') are skipped and
// sequence lines are concatenated.
std::vector<std::string> read_fasta(std::istream& in);

// One read per non-empty line.
std::vector<std::string> read_lines(std::istream& in);

// One (K+1)-mer per non-empty line; returned deduplicated. Throws
// input_error naming the line on a wrong length or foreign symbol.
EdgeMatrix read_kmers(std::istream& in, std::size_t order, const Alphabet& alphabet = Alphabet());

// Splits reads at symbols outside the alphabet, dropping empty pieces.
std::vector<std::string> split_at_unknown(const std::vector<std::string>& reads,
                                          const Alphabet& alphabet = Alphabet());

}  // namespace vodbg
