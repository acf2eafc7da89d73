#include "vodbg/oracle.hpp"

#include <functional>
#include <sstream>

#include "vodbg/errors.hpp"

namespace vodbg {

OracleGraph::OracleGraph(const EdgeMatrix& rows, std::size_t k) : order_(k) {
    const std::size_t big_k = rows.order();
    if (k > big_k)
        throw order_error("oracle order " + std::to_string(k) + " exceeds K = "
                          + std::to_string(big_k));
    if (rows.rows() > kOracleRowCap)
        throw input_error("oracle refused: " + std::to_string(rows.rows()) + " rows exceed the cap of "
                          + std::to_string(kOracleRowCap));
    for (std::size_t r = 1; r <= rows.rows(); ++r) {
        const std::string tuple = rows.tuple_string(r);
        const std::string u = tuple.substr(big_k - k, k);
        nodes_.insert(u);
        const char a = tuple.back();
        if (a == Alphabet::kTerminator)
            continue;
        const std::string w = tuple.substr(big_k + 1 - k, k);
        out_[u][a] = w;
        in_[w].insert(u);
    }
}

std::optional<std::string> OracleGraph::forward(const std::string& label, char a) const {
    const auto it = out_.find(label);
    if (it == out_.end())
        return std::nullopt;
    const auto e = it->second.find(a);
    if (e == it->second.end())
        return std::nullopt;
    return e->second;
}

std::set<std::string> OracleGraph::predecessors(const std::string& label) const {
    const auto it = in_.find(label);
    return it == in_.end() ? std::set<std::string>{} : it->second;
}

std::set<std::pair<char, std::string>> OracleGraph::successors(const std::string& label) const {
    std::set<std::pair<char, std::string>> out;
    if (const auto it = out_.find(label); it != out_.end())
        for (const auto& [a, w] : it->second)
            out.emplace(a, w);
    return out;
}

std::size_t OracleGraph::edge_count() const noexcept {
    std::size_t n = 0;
    for (const auto& [u, edges] : out_)
        n += edges.size();
    return n;
}

void MismatchReport::merge(const MismatchReport& other) {
    mismatches.insert(mismatches.end(), other.mismatches.begin(), other.mismatches.end());
    checks += other.checks;
}

namespace {

std::string show(const std::optional<std::string>& s) {
    return s ? "'" + *s + "'" : std::string("NULL");
}

std::string describe(const NodeHandle& v, const std::string& label) {
    return "node '" + label + "' (" + v.to_string() + ")";
}

class Checker {
public:
    Checker(const VarOrderIndex& vi, std::size_t max_reports) : vi_(vi), max_reports_(max_reports) {}

    void expect(bool ok, const std::string& op, const std::function<std::string()>& detail) {
        ++report.checks;
        if (ok)
            return;
        if (report.mismatches.size() < max_reports_)
            report.add(op + ": " + detail());
        else
            ++suppressed_;
    }

    std::optional<std::string> label_of(const std::optional<NodeHandle>& v) const {
        if (!v)
            return std::nullopt;
        return vi_.label(*v);
    }

    std::size_t suppressed() const noexcept { return suppressed_; }

    MismatchReport report;

private:
    const VarOrderIndex& vi_;
    std::size_t max_reports_;
    std::size_t suppressed_ = 0;
};

void compare_node(const VarOrderIndex& vi, const OracleGraph& og, const NodeHandle& v,
                  const std::string& lab, const std::map<std::string, std::set<std::string>>* ext,
                  Checker& check) {
    const std::size_t k = og.order();
    const std::size_t big_k = vi.max_order();
    const std::string symbols = std::string(1, Alphabet::kTerminator) + vi.alphabet().symbols();

    // lastchar
    const auto lc = vi.lastchar(v);
    const std::optional<char> lc_expected =
        k == 0 ? std::nullopt : std::optional<char>(lab.back());
    check.expect(lc == lc_expected, "lastchar", [&] {
        return describe(v, lab) + ": expected " + (lc_expected ? std::string(1, *lc_expected) : "NONE")
               + ", got " + (lc ? std::string(1, *lc) : "NONE");
    });

    // forward
    if (k >= 1) {
        for (char a : symbols) {
            const auto got = check.label_of(vi.forward(v, a));
            const auto expected = og.forward(lab, a);
            check.expect(got == expected, "forward", [&] {
                return describe(v, lab) + " symbol " + a + ": expected " + show(expected) + ", got "
                       + show(got);
            });
        }
    }

    // backward
    {
        std::set<std::string> got;
        for (const NodeHandle& u : vi.backward(v))
            got.insert(vi.label(u));
        const auto expected = og.predecessors(lab);
        check.expect(got == expected, "backward", [&] {
            std::ostringstream os;
            os << describe(v, lab) << ": expected {";
            for (const auto& s : expected) os << ' ' << s;
            os << " }, got {";
            for (const auto& s : got) os << ' ' << s;
            os << " }";
            return os.str();
        });
    }

    // maxlen
    for (char a : vi.alphabet().symbols()) {
        const auto m = vi.maxlen(v, a);
        const bool has_edge = og.forward(lab, a).has_value();
        bool ok = m.has_value() == has_edge;
        if (ok && m) {
            ok = vi.boss().is_node(*m) && vi.boss().label(*m).ends_with(lab)
                 && vi.boss().forward(*m, a).has_value();
        }
        check.expect(ok, "maxlen", [&] {
            return describe(v, lab) + " symbol " + a + ": oracle edge "
                   + (has_edge ? "exists" : "absent") + ", got " + (m ? m->to_string() : "NULL");
        });
    }
    {
        const auto m = vi.maxlen(v, std::nullopt);
        const bool ok = m && vi.boss().is_node(*m) && vi.boss().label(*m).ends_with(lab);
        check.expect(ok, "maxlen", [&] { return describe(v, lab) + " symbol *: not a containing order-K node"; });
    }

    // shorter by one symbol
    if (k >= 1) {
        const NodeHandle s = vi.shorter(v, k - 1);
        const std::string got = vi.label(s);
        check.expect(got == lab.substr(1), "shorter", [&] {
            return describe(v, lab) + " to order " + std::to_string(k - 1) + ": got '" + got + "'";
        });
    }

    // longer against the next-order oracle
    if (ext != nullptr) {
        std::set<std::string> got;
        for (const NodeHandle& x : vi.longer(v, k + 1))
            got.insert(vi.label(x));
        const auto it = ext->find(lab);
        const std::set<std::string> expected = it == ext->end() ? std::set<std::string>{} : it->second;
        check.expect(got == expected, "longer", [&] {
            return describe(v, lab) + " to order " + std::to_string(k + 1) + ": "
                   + std::to_string(got.size()) + " labels vs " + std::to_string(expected.size())
                   + " expected";
        });
    }

    // shorter/longer symmetry and partition for every higher order
    for (std::size_t kx = k; kx <= big_k; ++kx) {
        const auto xs = vi.longer(v, kx);
        bool partition = !xs.empty() && xs.front().i == v.i && xs.back().j == v.j;
        for (std::size_t t = 0; partition && t < xs.size(); ++t) {
            partition = xs[t].i <= xs[t].j && xs[t].k == kx && (t == 0 || xs[t].i == xs[t - 1].j + 1);
        }
        check.expect(partition, "longer", [&] {
            return describe(v, lab) + " to order " + std::to_string(kx) + ": not a partition of the interval";
        });
        for (const NodeHandle& x : xs) {
            const NodeHandle back = vi.shorter(x, k);
            check.expect(back == v, "shorter", [&] {
                return "round trip " + x.to_string() + " -> order " + std::to_string(k) + " gave "
                       + back.to_string() + ", expected " + v.to_string();
            });
        }
    }
}

}  // namespace

MismatchReport oracle_compare(const VarOrderIndex& vi, const OracleGraph& og,
                              const OracleGraph* next, std::size_t max_reports) {
    Checker check(vi, max_reports);
    const std::size_t k = og.order();
    if (k > vi.max_order()) {
        check.expect(false, "nodes", [&] { return "order " + std::to_string(k) + " exceeds K"; });
        return check.report;
    }

    // Expected extensions: order-(k+1) labels grouped by their length-k suffix.
    std::map<std::string, std::set<std::string>> extensions;
    if (next != nullptr)
        for (const std::string& u : next->nodes())
            extensions[u.substr(1)].insert(u);

    std::vector<NodeHandle> handles;
    try {
        handles = vi.nodes(k);
    } catch (const error& e) {
        check.expect(false, "nodes", [&] { return std::string(e.what()); });
        return check.report;
    }

    std::set<std::string> labels;
    for (const NodeHandle& v : handles) {
        std::string lab;
        try {
            check.expect(vi.validate_handle(v), "validate_handle",
                         [&] { return v.to_string() + " rejected"; });
            lab = vi.label(v);
            labels.insert(lab);
            compare_node(vi, og, v, lab, next != nullptr ? &extensions : nullptr, check);
        } catch (const error& e) {
            check.expect(false, "exception", [&] { return describe(v, lab) + ": " + e.what(); });
        }
    }
    check.expect(labels == og.nodes(), "nodes", [&] {
        return "order " + std::to_string(k) + ": " + std::to_string(labels.size())
               + " distinct labels vs " + std::to_string(og.nodes().size()) + " oracle nodes";
    });
    check.expect(labels.size() == handles.size(), "nodes", [&] {
        return "order " + std::to_string(k) + ": duplicate labels among node intervals";
    });
    if (check.suppressed() > 0)
        check.report.add("... " + std::to_string(check.suppressed()) + " further mismatches suppressed");
    return check.report;
}

MismatchReport oracle_compare_orders(const VarOrderIndex& vi, const EdgeMatrix& rows,
                                     const std::vector<std::size_t>& orders,
                                     std::size_t max_reports) {
    MismatchReport total;
    std::map<std::size_t, OracleGraph> cache;
    auto oracle_at = [&](std::size_t k) -> const OracleGraph& {
        auto it = cache.find(k);
        if (it == cache.end())
            it = cache.emplace(k, OracleGraph(rows, k)).first;
        return it->second;
    };
    for (std::size_t k : orders) {
        const OracleGraph* next = k < rows.order() ? &oracle_at(k + 1) : nullptr;
        auto report = oracle_compare(vi, oracle_at(k), next, max_reports);
        for (auto& m : report.mismatches)
            m = "[k=" + std::to_string(k) + "] " + m;
        total.merge(report);
    }
    return total;
}

}  // namespace vodbg
