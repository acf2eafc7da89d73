#include "vodbg/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <ostream>
#include <random>

#include "vodbg/errors.hpp"

namespace vodbg {

namespace {

struct Query {
    NodeHandle node;
    code_type symbol;
};

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    // splitmix-style combine
    h ^= v + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    return h;
}

std::uint64_t digest(const NodeHandle& v) { return mix(mix(v.i, v.j), v.k); }
std::uint64_t digest(const std::optional<NodeHandle>& v) { return v ? digest(*v) : 0x5A5A; }
std::uint64_t digest(const std::vector<NodeHandle>& vs) {
    std::uint64_t h = vs.size();
    for (const auto& v : vs)
        h = mix(h, digest(v));
    return h;
}

class Sampler {
public:
    Sampler(const VarOrderIndex& index, std::uint64_t seed) : index_(index), rng_(seed) {}

    // n queries with orders uniform in [lo, hi]; empty when lo > hi.
    std::vector<Query> draw(std::size_t n, std::size_t lo, std::size_t hi) {
        std::vector<Query> out;
        if (lo > hi)
            return out;
        std::uniform_int_distribution<std::size_t> row(1, index_.rows());
        std::uniform_int_distribution<std::size_t> order(lo, hi);
        std::uniform_int_distribution<int> symbol(1, static_cast<int>(index_.alphabet().sigma()));
        out.reserve(n);
        for (std::size_t q = 0; q < n; ++q) {
            const NodeHandle full = index_.boss().node_from_row(row(rng_));
            const std::size_t k = order(rng_);
            out.push_back({index_.shorter_unchecked(full, k), static_cast<code_type>(symbol(rng_))});
        }
        return out;
    }

private:
    const VarOrderIndex& index_;
    std::mt19937_64 rng_;
};

BenchRow time_op(const std::string& name, const std::vector<Query>& queries, std::size_t repeats,
                 const std::function<std::uint64_t(const Query&)>& op) {
    BenchRow row{name, queries.size(), 0, 0.0};
    if (queries.empty())
        return row;
    double best = 0.0;
    for (std::size_t rep = 0; rep < std::max<std::size_t>(1, repeats); ++rep) {
        std::uint64_t h = 0;
        const auto t0 = std::chrono::steady_clock::now();
        for (const Query& q : queries)
            h = mix(h, op(q));
        const auto t1 = std::chrono::steady_clock::now();
        const double ns = std::chrono::duration<double, std::nano>(t1 - t0).count();
        if (rep == 0 || ns < best)
            best = ns;
        row.checksum = h;
    }
    row.mean_ns = best / static_cast<double>(queries.size());
    return row;
}

}  // namespace

std::vector<BenchRow> run_bench(const VarOrderIndex& index, const BenchOptions& options) {
    if (options.queries == 0)
        throw input_error("bench needs at least one query");
    const std::size_t big_k = index.max_order();
    const std::size_t lo = std::min<std::size_t>(8, big_k);
    const std::size_t n = options.queries;
    const std::size_t reps = options.repeats;
    Sampler sample(index, options.seed);
    const BossIndex& boss = index.boss();

    std::vector<BenchRow> rows;
    const auto general = sample.draw(n, std::max<std::size_t>(lo, 1), big_k);
    rows.push_back(time_op("forward", general, reps, [&](const Query& q) {
        return digest(index.forward_unchecked(q.node, q.symbol));
    }));
    rows.push_back(time_op("backward", general, reps, [&](const Query& q) {
        return digest(index.backward_unchecked(q.node));
    }));
    rows.push_back(time_op("lastchar", general, reps, [&](const Query& q) {
        return std::uint64_t{boss.lastchar_unchecked(q.node.i)};
    }));

    for (std::size_t d : {1, 4}) {
        const auto qs = sample.draw(n, std::max(lo, d), big_k);
        rows.push_back(time_op("shorter_" + std::to_string(d), qs, reps, [&, d](const Query& q) {
            return digest(index.shorter_unchecked(q.node, q.node.k - d));
        }));
    }
    for (std::size_t d : {1, 4}) {
        const auto qs = big_k >= d ? sample.draw(n, std::min(lo, big_k - d), big_k - d)
                                   : std::vector<Query>{};
        rows.push_back(time_op("longer_" + std::to_string(d), qs, reps, [&, d](const Query& q) {
            return digest(index.longer_unchecked(q.node, q.node.k + d));
        }));
    }

    const auto any_order = sample.draw(n, lo, big_k);
    rows.push_back(time_op("maxlen", any_order, reps, [&](const Query& q) {
        return digest(boss.node_from_row_unchecked(q.node.i));
    }));
    rows.push_back(time_op("maxlen_c", any_order, reps, [&](const Query& q) {
        return digest(index.maxlen_unchecked(q.node, q.symbol));
    }));

    const auto full = sample.draw(n, big_k, big_k);
    rows.push_back(time_op("forward_K", full, reps, [&](const Query& q) {
        return digest(index.forward_unchecked(q.node, q.symbol));
    }));
    rows.push_back(time_op("boss_forward", full, reps, [&](const Query& q) {
        return digest(boss.forward_unchecked(q.node, q.symbol));
    }));
    rows.push_back(time_op("boss_backward", full, reps, [&](const Query& q) {
        return digest(boss.backward(q.node));
    }));
    return rows;
}

void print_bench(const std::vector<BenchRow>& rows, std::ostream& out) {
    char line[160];
    std::snprintf(line, sizeof line, "%-14s %9s  %-18s %12s\n", "op", "queries", "checksum", "mean_ns");
    out << line;
    for (const BenchRow& r : rows) {
        if (r.queries == 0)
            std::snprintf(line, sizeof line, "%-14s %9zu  %-18s %12s\n", r.op.c_str(), r.queries,
                          "-", "N/A");
        else
            std::snprintf(line, sizeof line, "%-14s %9zu  0x%016llx %12.1f\n", r.op.c_str(),
                          r.queries, static_cast<unsigned long long>(r.checksum), r.mean_ns);
        out << line;
    }
}

const BenchRow* find_row(const std::vector<BenchRow>& rows, const std::string& op) {
    for (const BenchRow& r : rows)
        if (r.op == op)
            return &r;
    return nullptr;
}

}  // namespace vodbg
