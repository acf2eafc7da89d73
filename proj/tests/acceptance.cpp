// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "vodbg/bench.hpp"
#include "vodbg/errors.hpp"
#include "vodbg/oracle.hpp"
#include "vodbg/storage.hpp"
#include "vodbg/var_order.hpp"

using namespace vodbg;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects failed expectations; the first few are printed under the verdict.
struct Tally {
    std::vector<std::string> failures;
    std::size_t checks = 0;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok)
            failures.push_back(what);
    }
    bool ok() const { return failures.empty(); }
};

template <class T>
std::string show(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string show(const std::optional<NodeHandle>& v) { return v ? v->to_string() : "NULL"; }
std::string show(const std::vector<NodeHandle>& vs) {
    std::string s = "{";
    for (const auto& v : vs)
        s += " " + v.to_string();
    return s + " }";
}

bool report(int id, const std::string& name, const Tally& t, const std::string& detail) {
    std::printf("%s criterion %d: %s (%zu checks%s%s)\n", t.ok() ? "PASS" : "FAIL", id, name.c_str(),
                t.checks, detail.empty() ? "" : "; ", detail.c_str());
    for (std::size_t n = 0; n < t.failures.size() && n < 10; ++n)
        std::printf("    %s\n", t.failures[n].c_str());
    std::fflush(stdout);
    return t.ok();
}

NodeHandle at(std::size_t i, std::size_t j, std::size_t k) { return {i, j, k}; }

void check_example(const VarOrderIndex& vi, const EdgeMatrix* matrix, Tally& t) {
    if (matrix != nullptr) {
        t.expect(matrix->rows() == 13, "13 rows");
        t.expect(matrix->to_strings() == fixtures::kExampleRows, "row order");
    }
    const BossIndex& b = vi.boss();
    t.expect(b.rows() == 13, "n_rows = 13, got " + show(b.rows()));
    t.expect(b.w_string() == "TCCGTGGATAA$C", "W = " + b.w_string());
    t.expect(b.last().to_string() == "1110111011111", "L = " + b.last().to_string());
    const std::vector<WaveletTree::symbol_type> lstar = {0, 1, 0, 3, 2, 1, 0, 3, 2, 0, 1, 1};
    t.expect(vi.lstar().to_vector() == lstar, "L* values");

    const std::vector<NodeHandle> k3 = {at(1, 1, 3), at(2, 2, 3), at(3, 3, 3),   at(4, 5, 3),
                                        at(6, 6, 3), at(7, 7, 3), at(8, 9, 3),   at(10, 10, 3),
                                        at(11, 11, 3), at(12, 12, 3), at(13, 13, 3)};
    const std::vector<std::string> k3_labels = {"$$$", "CGA", "$TA", "GAC", "TAC", "GTC",
                                                "ACG", "TCG", "$$T", "ACT", "CGT"};
    const std::vector<NodeHandle> k2 = {at(1, 1, 2), at(2, 2, 2), at(3, 3, 2), at(4, 6, 2), at(7, 7, 2),
                                        at(8, 10, 2), at(11, 11, 2), at(12, 12, 2), at(13, 13, 2)};
    const std::vector<std::string> k2_labels = {"$$", "GA", "TA", "AC", "TC", "CG", "$T", "CT", "GT"};
    const std::vector<NodeHandle> k1 = {at(1, 1, 1), at(2, 3, 1), at(4, 7, 1), at(8, 10, 1), at(11, 13, 1)};
    const std::vector<std::string> k1_labels = {"$", "A", "C", "G", "T"};
    const std::vector<NodeHandle> k0 = {at(1, 13, 0)};
    const std::vector<std::string> k0_labels = {""};

    const std::vector<std::pair<const std::vector<NodeHandle>*, const std::vector<std::string>*>> orders = {
        {&k0, &k0_labels}, {&k1, &k1_labels}, {&k2, &k2_labels}, {&k3, &k3_labels}};
    t.expect(b.nodes() == 11, "11 nodes");
    for (std::size_t k = 0; k <= 3; ++k) {
        const auto nodes = vi.nodes(k);
        t.expect(nodes == *orders[k].first, "order-" + show(k) + " nodes " + show(nodes));
        std::vector<std::string> labels;
        for (const auto& v : nodes)
            labels.push_back(vi.label(v));
        t.expect(labels == *orders[k].second, "order-" + show(k) + " labels");
    }
}

void check_examples(const VarOrderIndex& vi, Tally& t) {
    auto same = [&](const auto& got, const auto& expected, const std::string& what) {
        t.expect(got == expected, what + " = " + show(got));
    };
    same(vi.forward(at(8, 9, 3), 'A'), std::optional<NodeHandle>(at(2, 2, 3)), "forward([8,9],A)");
    same(vi.backward(at(2, 2, 3)), std::vector<NodeHandle>{at(8, 9, 3), at(10, 10, 3)}, "backward([2,2])");
    const auto lc = vi.lastchar(at(8, 9, 3));
    t.expect(lc == 'G', "lastchar([8,9])");
    same(vi.shorter(at(4, 5, 3), 2), at(4, 6, 2), "shorter([4,5],2)");
    same(vi.longer(at(4, 6, 2), 3), std::vector<NodeHandle>{at(4, 5, 3), at(6, 6, 3)}, "longer([4,6],3)");
    same(vi.maxlen(at(4, 6, 2), 'T'), std::optional<NodeHandle>(at(4, 5, 3)), "maxlen([4,6],T)");
    same(vi.maxlen(at(4, 6, 2), 'A'), std::optional<NodeHandle>(), "maxlen([4,6],A)");
    const auto g = vi.maxlen(at(4, 6, 2), 'G');
    t.expect(g == at(4, 5, 3) || g == at(6, 6, 3), "maxlen([4,6],G) = " + show(g));
}

bool criterion1() {
    const auto t0 = Clock::now();
    Tally t;
    try {
        const EdgeMatrix m = fixtures::example_matrix();
        check_example(build_index(m), &m, t);
    } catch (const std::exception& e) {
        t.expect(false, std::string("exception: ") + e.what());
    }
    const double s = seconds_since(t0);
    t.expect(s < 1.0, "runtime " + show(s) + " s");
    char detail[64];
    std::snprintf(detail, sizeof detail, "%.3f s", s);
    return report(1, "worked-example matrix, columns and node lists", t, detail);
}

bool criterion2() {
    const auto t0 = Clock::now();
    Tally t;
    try {
        check_examples(fixtures::example_index(), t);
    } catch (const std::exception& e) {
        t.expect(false, std::string("exception: ") + e.what());
    }
    const double s = seconds_since(t0);
    t.expect(s < 1.0, "runtime " + show(s) + " s");
    char detail[64];
    std::snprintf(detail, sizeof detail, "%.3f s", s);
    return report(2, "worked-example navigation answers", t, detail);
}

struct PropertyCorpus {
    fixtures::Corpus corpus;
    EdgeMatrix matrix{1};
    VarOrderIndex index;
};

std::vector<PropertyCorpus> property_corpora() {
    std::vector<PropertyCorpus> out;
    for (std::uint64_t c = 0; c < 50; ++c) {
        PropertyCorpus pc;
        pc.corpus = fixtures::random_corpus(1000 + c, 10, 100, 20, 60, 4, 12);
        pc.corpus.revcomp = c % 2 == 1;  // half each way
        pc.matrix = build_matrix(pc.corpus.reads, pc.corpus.order, pc.corpus.revcomp);
        pc.index = build_index(pc.matrix);
        out.push_back(std::move(pc));
    }
    return out;
}

bool criterion3(const std::vector<PropertyCorpus>& corpora, double build_seconds) {
    const auto t0 = Clock::now();
    Tally t;
    std::size_t oracle_checks = 0;
    for (std::size_t c = 0; c < corpora.size(); ++c) {
        const auto& pc = corpora[c];
        std::vector<std::size_t> orders;
        for (std::size_t k = 0; k <= pc.corpus.order; ++k)
            orders.push_back(k);
        try {
            const auto r = oracle_compare_orders(pc.index, pc.matrix, orders, 5);
            oracle_checks += r.checks;
            t.expect(r.empty(), "corpus " + show(c) + ": " + (r.empty() ? "" : r.mismatches.front()));
        } catch (const std::exception& e) {
            t.expect(false, "corpus " + show(c) + ": exception " + e.what());
        }
    }
    const double s = seconds_since(t0) + build_seconds;
    t.expect(s < 300.0, "runtime " + show(s) + " s");
    char detail[96];
    std::snprintf(detail, sizeof detail, "50 corpora, %zu oracle comparisons, %.1f s", oracle_checks, s);
    return report(3, "oracle equivalence at every order", t, detail);
}

bool criterion4(const std::vector<PropertyCorpus>& corpora) {
    Tally t;
    std::size_t violations = 0;
    for (std::size_t c = 0; c < corpora.size(); ++c) {
        const VarOrderIndex& vi = corpora[c].index;
        const std::size_t big_k = vi.max_order();
        for (std::size_t k = 0; k <= big_k; ++k) {
            for (const NodeHandle& v : vi.nodes(k)) {
                for (std::size_t kx = k; kx <= big_k; ++kx) {
                    const auto xs = vi.longer(v, kx);
                    bool partition = !xs.empty() && xs.front().i == v.i && xs.back().j == v.j;
                    for (std::size_t n = 1; partition && n < xs.size(); ++n)
                        partition = xs[n].i == xs[n - 1].j + 1;
                    ++t.checks;
                    if (!partition) {
                        ++violations;
                        t.failures.push_back("corpus " + show(c) + ": longer(" + v.to_string() + ", "
                                             + show(kx) + ") is not a partition");
                    }
                    for (const NodeHandle& x : xs) {
                        ++t.checks;
                        if (vi.shorter(x, k) != v) {
                            ++violations;
                            t.failures.push_back("corpus " + show(c) + ": shorter(" + x.to_string()
                                                 + ", " + show(k) + ") != " + v.to_string());
                        }
                    }
                }
            }
        }
    }
    return report(4, "shorter/longer symmetry and partition", t, show(violations) + " violations");
}

struct LargeIndex {
    VarOrderIndex index;
    double build_seconds = 0;
};

bool criterion5(LargeIndex& large) {
    const auto t0 = Clock::now();
    Tally t;
    const std::string genome = fixtures::random_dna(1'000'000, 2024);
    const auto reads = fixtures::tile_reads(genome, 100, 50);
    large.index = build_index(build_matrix(reads, 27, true));
    large.build_seconds = seconds_since(t0);

    const VarOrderIndex& vi = large.index;
    const std::size_t n = vi.rows();
    const std::size_t width = static_cast<std::size_t>(std::ceil(std::log2(28.0)));
    const double lstar_bound = 1.5 * static_cast<double>(n - 1) * static_cast<double>(width);
    const double boss_bits = static_cast<double>(vi.boss().stats().bits_total());
    const double ratio = static_cast<double>(vi.total_bits()) / boss_bits;
    t.expect(static_cast<double>(vi.lstar_bits()) <= lstar_bound,
             "L* bits " + show(vi.lstar_bits()) + " > bound " + show(lstar_bound));
    t.expect(ratio <= 4.0, "size ratio " + show(ratio));
    const double s = seconds_since(t0);
    t.expect(s < 600.0, "runtime " + show(s) + " s");
    char detail[200];
    std::snprintf(detail, sizeof detail,
                  "n_rows=%zu, L* %zu bits (%.2f/row, bound %.1f/row), total/BOSS = %.2fx, %.1f s", n,
                  vi.lstar_bits(), static_cast<double>(vi.lstar_bits()) / (n - 1), lstar_bound / (n - 1),
                  ratio, s);
    return report(5, "space overhead on a 1 Mbp genome at K=27", t, detail);
}

bool criterion6(const LargeIndex& large) {
    Tally t;
    BenchOptions options;
    options.queries = 20000;
    options.seed = 6;
    options.repeats = 5;
    const auto rows = run_bench(large.index, options);
    auto mean = [&](const char* op) {
        const BenchRow* r = find_row(rows, op);
        return r != nullptr ? r->mean_ns : 0.0;
    };
    const double fwd_k = mean("forward_K"), boss_fwd = mean("boss_forward");
    const double s1 = mean("shorter_1"), s4 = mean("shorter_4");
    const double l1 = mean("longer_1"), l4 = mean("longer_4");
    t.expect(fwd_k <= 1.2 * boss_fwd, "forward at K " + show(fwd_k) + " ns vs BOSS " + show(boss_fwd) + " ns");
    t.expect(std::max(s1, s4) <= 2.0 * std::min(s1, s4),
             "shorter_1 " + show(s1) + " ns vs shorter_4 " + show(s4) + " ns");
    t.expect(l4 > l1, "longer_4 " + show(l4) + " ns vs longer_1 " + show(l1) + " ns");
    std::ostringstream table;
    print_bench(rows, table);
    std::string indented;
    std::istringstream in(table.str());
    for (std::string line; std::getline(in, line);)
        indented += "    " + line + "\n";
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "forward_K/boss %.2f, shorter_4/shorter_1 %.2f, longer_4/longer_1 %.2f", fwd_k / boss_fwd,
                  s4 / s1, l4 / l1);
    const bool ok = report(6, "navigation slowdown character", t, detail);
    std::printf("%s", indented.c_str());
    return ok;
}

bool criterion7() {
    Tally t;
    try {
        const VarOrderIndex original = fixtures::example_index();
        std::ostringstream first;
        save(original, first);
        std::istringstream in(first.str());
        const VarOrderIndex loaded = load(in);
        check_example(loaded, nullptr, t);
        check_examples(loaded, t);
        std::ostringstream second;
        save(loaded, second);
        t.expect(first.str() == second.str(), "re-saved bytes differ");

        const std::string path = fixtures::temp_path("acceptance.vdbg");
        save_file(original, path);
        const VarOrderIndex from_file = load_file(path);
        Tally file_checks;
        check_example(from_file, nullptr, file_checks);
        check_examples(from_file, file_checks);
        t.checks += file_checks.checks;
        for (auto& f : file_checks.failures)
            t.failures.push_back("file: " + f);
    } catch (const std::exception& e) {
        t.expect(false, std::string("exception: ") + e.what());
    }
    return report(7, "save/load round trip", t, "");
}

}  // namespace

int main() {
    bool all = true;
    all &= criterion1();
    all &= criterion2();

    const auto t0 = Clock::now();
    const auto corpora = property_corpora();
    const double build_seconds = seconds_since(t0);
    all &= criterion3(corpora, build_seconds);
    all &= criterion4(corpora);

    LargeIndex large;
    const bool c5 = criterion5(large);
    all &= c5;
    all &= criterion6(large);
    all &= criterion7();

    std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED");
    return all ? 0 : 1;
}
