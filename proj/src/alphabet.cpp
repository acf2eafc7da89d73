#include "vodbg/alphabet.hpp"

#include "vodbg/errors.hpp"

namespace vodbg {

namespace {

char dna_partner(char ch) {
    switch (ch) {
        case 'A': return 'T';
        case 'T': return 'A';
        case 'C': return 'G';
        case 'G': return 'C';
        case 'a': return 't';
        case 't': return 'a';
        case 'c': return 'g';
        case 'g': return 'c';
        default: return 0;
    }
}

}  // namespace

Alphabet::Alphabet() : Alphabet("ACGT") {}

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
    if (symbols.empty())
        throw alphabet_error("alphabet must contain at least one symbol");
    if (symbols.size() > 126)
        throw alphabet_error("alphabet too large (at most 126 symbols)");
    code_of_.fill(kInvalid);
    complement_.fill(kInvalid);
    code_of_[static_cast<unsigned char>(kTerminator)] = kTerminatorCode;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        const auto ch = static_cast<unsigned char>(symbols[i]);
        if (symbols[i] == kTerminator)
            throw alphabet_error("'$' is reserved and always ranked first");
        if (code_of_[ch] != kInvalid)
            throw alphabet_error(std::string("duplicate symbol '") + symbols[i] + "'");
        code_of_[ch] = static_cast<code_type>(i + 1);
    }
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        const char partner = dna_partner(symbols[i]);
        if (partner != 0 && contains(partner))
            complement_[i + 1] = code_of_[static_cast<unsigned char>(partner)];
    }
}

code_type Alphabet::code(char ch) const {
    const code_type c = code_of_[static_cast<unsigned char>(ch)];
    if (c == kInvalid)
        throw alphabet_error(std::string("symbol '") + ch + "' not in alphabet {$" + symbols_ + "}");
    return c;
}

char Alphabet::symbol(code_type c) const {
    if (c > symbols_.size())
        throw alphabet_error("symbol code " + std::to_string(c) + " outside alphabet");
    return symbol_unchecked(c);
}

bool Alphabet::has_complement() const noexcept {
    for (std::size_t c = 1; c <= symbols_.size(); ++c)
        if (complement_[c] == kInvalid)
            return false;
    return true;
}

code_type Alphabet::complement(code_type c) const {
    if (c == 0 || c > symbols_.size() || complement_[c] == kInvalid)
        throw alphabet_error("no complement for symbol code " + std::to_string(c));
    return complement_[c];
}

std::string Alphabet::decode(std::string_view codes) const {
    std::string out(codes.size(), kTerminator);
    for (std::size_t i = 0; i < codes.size(); ++i)
        out[i] = symbol(static_cast<code_type>(codes[i]));
    return out;
}

}  // namespace vodbg
