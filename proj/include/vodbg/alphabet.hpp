#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace vodbg {

using code_type = std::uint8_t;

// Ordered symbol set with the terminator '$' implicitly ranked first.
// Code 0 is '$'; the i-th configured symbol gets code i (1-based).
class Alphabet {
public:
    static constexpr char kTerminator = '$';
    static constexpr code_type kTerminatorCode = 0;
    static constexpr code_type kInvalid = 0xFF;

    Alphabet();  // DNA: A < C < G < T
    explicit Alphabet(std::string_view symbols);

    static Alphabet dna() { return Alphabet(); }

    // Number of symbols excluding '$'.
    std::size_t sigma() const noexcept { return symbols_.size(); }
    const std::string& symbols() const noexcept { return symbols_; }

    bool contains(char ch) const noexcept { return code_of_[static_cast<unsigned char>(ch)] != kInvalid; }
    code_type code(char ch) const;
    code_type code_unchecked(char ch) const noexcept { return code_of_[static_cast<unsigned char>(ch)]; }
    char symbol(code_type c) const;
    char symbol_unchecked(code_type c) const noexcept { return c == 0 ? kTerminator : symbols_[c - 1]; }

    // Watson-Crick complement; only defined when every symbol has a partner.
    bool has_complement() const noexcept;
    code_type complement(code_type c) const;

    std::string decode(std::string_view codes) const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }

private:
    std::string symbols_;
    std::array<code_type, 256> code_of_{};
    std::array<code_type, 256> complement_{};
};

}  // namespace vodbg
