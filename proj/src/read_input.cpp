#include "vodbg/read_input.hpp"

#include <istream>

#include "vodbg/errors.hpp"

namespace vodbg {

namespace {

void strip(std::string& line) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
        line.pop_back();
    std::size_t lead = 0;
    while (lead < line.size() && (line[lead] == ' ' || line[lead] == '\t'))
        ++lead;
    line.erase(0, lead);
}

}  // namespace

InputFormat parse_input_format(const std::string& name) {
    if (name == "fasta") return InputFormat::fasta;
    if (name == "reads") return InputFormat::reads;
    if (name == "kmers") return InputFormat::kmers;
    throw input_error("unknown input format '" + name + "' (expected fasta, reads or kmers)");
}

std::vector<std::string> read_fasta(std::istream& in) {
    std::vector<std::string> reads;
    std::string line;
    bool open = false;
    while (std::getline(in, line)) {
        strip(line);
        if (line.empty())
            continue;
        if (line[0] == '>' || line[0] == ';') {
            if (line[0] == '>') {
                reads.emplace_back();
                open = true;
            }
            continue;
        }
        if (!open) {
            reads.emplace_back();
            open = true;
        }
        reads.back() += line;
    }
    std::erase_if(reads, [](const std::string& r) { return r.empty(); });
    return reads;
}

std::vector<std::string> read_lines(std::istream& in) {
    std::vector<std::string> reads;
    std::string line;
    while (std::getline(in, line)) {
        strip(line);
        if (!line.empty())
            reads.push_back(line);
    }
    return reads;
}

EdgeMatrix read_kmers(std::istream& in, std::size_t order, const Alphabet& alphabet) {
    EdgeMatrix edges(order, alphabet);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        strip(line);
        if (line.empty())
            continue;
        if (line.size() != order + 1)
            throw input_error("line " + std::to_string(line_no) + ": '" + line + "' has length "
                              + std::to_string(line.size()) + ", expected K+1 = "
                              + std::to_string(order + 1));
        for (std::size_t p = 0; p < line.size(); ++p) {
            const code_type c = alphabet.code_unchecked(line[p]);
            if (c == Alphabet::kInvalid || c == Alphabet::kTerminatorCode)
                throw input_error("line " + std::to_string(line_no) + ", position "
                                  + std::to_string(p + 1) + ": symbol '" + line[p]
                                  + "' not in alphabet " + alphabet.symbols());
        }
        edges.push_tuple(line);
    }
    return sort_edges(edges);
}

std::vector<std::string> split_at_unknown(const std::vector<std::string>& reads,
                                          const Alphabet& alphabet) {
    std::vector<std::string> out;
    for (const std::string& read : reads) {
        std::string piece;
        for (char ch : read) {
            const code_type c = alphabet.code_unchecked(ch);
            if (c == Alphabet::kInvalid || c == Alphabet::kTerminatorCode) {
                if (!piece.empty())
                    out.push_back(std::move(piece));
                piece.clear();
            } else {
                piece.push_back(ch);
            }
        }
        if (!piece.empty())
            out.push_back(std::move(piece));
    }
    return out;
}

}  // namespace vodbg
