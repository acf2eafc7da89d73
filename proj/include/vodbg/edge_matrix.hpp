#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vodbg/alphabet.hpp"

namespace vodbg {

/**
 * A list of (K+1)-tuples stored row-major as symbol codes.
 *
 * Used both for raw edge sets (the distinct (K+1)-mers of a read set) and
 * for the BOSS matrix, whose rows are (source, edge label) with the source
 * being the first K symbols. Rows are numbered from 1.
 */
class EdgeMatrix {
public:
    explicit EdgeMatrix(std::size_t order, Alphabet alphabet = Alphabet());

    std::size_t order() const noexcept { return order_; }
    std::size_t width() const noexcept { return order_ + 1; }
    std::size_t rows() const noexcept { return codes_.size() / width(); }
    bool empty() const noexcept { return codes_.empty(); }
    const Alphabet& alphabet() const noexcept { return alphabet_; }

    // Codes of row r (1-based): K source symbols then the edge label.
    std::string_view row(std::size_t r) const noexcept {
        return std::string_view(codes_).substr((r - 1) * width(), width());
    }
    std::string_view source(std::size_t r) const noexcept { return row(r).substr(0, order_); }
    std::string_view target(std::size_t r) const noexcept { return row(r).substr(1); }
    code_type edge_label(std::size_t r) const noexcept {
        return static_cast<code_type>(codes_[r * width() - 1]);
    }

    void push_codes(std::string_view codes);
    // Tuple written with alphabet symbols, e.g. "GACG" or "$$$T".
    void push_tuple(std::string_view tuple);

    std::string tuple_string(std::size_t r) const { return alphabet_.decode(row(r)); }
    std::string source_string(std::size_t r) const { return alphabet_.decode(source(r)); }
    std::vector<std::string> to_strings() const;

    // Adjacent rows strictly increasing in colex order (source right-to-left,
    // then edge label).
    bool is_colex_sorted() const noexcept;

    const std::string& codes() const noexcept { return codes_; }
    std::string& mutable_codes() noexcept { return codes_; }

private:
    std::size_t order_;
    Alphabet alphabet_;
    std::string codes_;
};

// Colex comparison of two rows given as codes: source compared from its last
// symbol backwards, ties broken by the edge label.
int colex_compare(std::string_view a, std::string_view b) noexcept;

/**
 * Distinct (K+1)-mers of the reads, optionally with the (K+1)-mers of their
 * reverse complements. Reads shorter than K+1 contribute nothing. Throws
 * input_error naming the read (1-based) and position of any foreign symbol.
 */
EdgeMatrix extract_edges(std::span<const std::string> reads, std::size_t order,
                         bool revcomp = false, const Alphabet& alphabet = Alphabet());

// Input edges plus the $-padded dummy tuples: incoming chains $^m·prefix for
// sources nobody points at, and (target, $) rows for targets with no
// outgoing edge. Deduplicated, order unspecified.
EdgeMatrix add_dummies(const EdgeMatrix& edges);

// Deduplicated rows in colex order, via LSD radix sort on the reversed source.
EdgeMatrix sort_edges(const EdgeMatrix& rows);

// Dummy-closure check used to validate matrices handed to build_boss:
// every non-root source is some row's target and every non-$ edge leads to
// an existing source.
bool is_dummy_closed(const EdgeMatrix& matrix);

// extract -> add_dummies -> sort.
EdgeMatrix build_matrix(std::span<const std::string> reads, std::size_t order,
                        bool revcomp = false, const Alphabet& alphabet = Alphabet());

}  // namespace vodbg
