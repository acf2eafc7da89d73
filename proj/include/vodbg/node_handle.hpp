#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>

namespace vodbg {

// A node of the order-k graph: the maximal row interval [i, j] (1-based,
// inclusive) of the BOSS matrix whose sources share a length-k suffix.
struct NodeHandle {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;

    std::size_t width() const noexcept { return j - i + 1; }
    bool contains(std::size_t row) const noexcept { return i <= row && row <= j; }

    // "i,j,k"
    std::string to_string() const {
        return std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k);
    }

    friend auto operator<=>(const NodeHandle&, const NodeHandle&) = default;
    friend std::ostream& operator<<(std::ostream& os, const NodeHandle& v) {
        return os << '[' << v.i << ", " << v.j << "]@" << v.k;
    }
};

}  // namespace vodbg
