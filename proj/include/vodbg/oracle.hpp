#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vodbg/edge_matrix.hpp"
#include "vodbg/var_order.hpp"

namespace vodbg {

/**
 * Explicit de Bruijn graph of order k derived from a dummy-closed edge set.
 * Nodes are the distinct length-k suffixes of the row sources; each non-$
 * row (s, a) contributes the edge suffix_k(s) -a-> suffix_k(s a).
 */
class OracleGraph {
public:
    OracleGraph(const EdgeMatrix& rows, std::size_t k);

    std::size_t order() const noexcept { return order_; }
    const std::set<std::string>& nodes() const noexcept { return nodes_; }
    bool has_node(const std::string& label) const { return nodes_.contains(label); }

    std::optional<std::string> forward(const std::string& label, char a) const;
    std::set<std::string> predecessors(const std::string& label) const;
    std::set<std::pair<char, std::string>> successors(const std::string& label) const;
    std::size_t edge_count() const noexcept;

private:
    std::size_t order_;
    std::set<std::string> nodes_;
    std::map<std::string, std::map<char, std::string>> out_;
    std::map<std::string, std::set<std::string>> in_;
};

// Mismatches between an index and the oracle; each entry starts with the
// failing operation's name.
struct MismatchReport {
    std::vector<std::string> mismatches;
    std::size_t checks = 0;

    bool empty() const noexcept { return mismatches.empty(); }
    void add(std::string what) { mismatches.push_back(std::move(what)); }
    void merge(const MismatchReport& other);
};

/**
 * Compares every order-k node of `vi` against `og` (k = og.order()): label
 * set, forward on every symbol (k >= 1), backward, lastchar, maxlen, and the
 * shorter/longer round trip and partition properties for every higher order.
 * When `next` (the order-(k+1) oracle) is given, longer(v, k+1) and
 * shorter(x, k) are also checked label-for-label against it.
 */
MismatchReport oracle_compare(const VarOrderIndex& vi, const OracleGraph& og,
                              const OracleGraph* next = nullptr, std::size_t max_reports = 50);

// oracle_compare for each requested order, building the oracles from `rows`.
MismatchReport oracle_compare_orders(const VarOrderIndex& vi, const EdgeMatrix& rows,
                                     const std::vector<std::size_t>& orders,
                                     std::size_t max_reports = 50);

// Oracle instances are refused above this many matrix rows.
inline constexpr std::size_t kOracleRowCap = 100000;

}  // namespace vodbg
