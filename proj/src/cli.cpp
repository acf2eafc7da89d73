#include "vodbg/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "vodbg/bench.hpp"
#include "vodbg/contigs.hpp"
#include "vodbg/errors.hpp"
#include "vodbg/oracle.hpp"
#include "vodbg/read_input.hpp"
#include "vodbg/storage.hpp"
#include "vodbg/var_order.hpp"

namespace vodbg {

namespace {

constexpr std::size_t kMaxCliOrder = std::size_t{1} << 16;

// Usage problems detected after CLI11 has accepted the arguments.
struct usage_error : error {
    using error::error;
};

std::size_t parse_size(std::string_view text, const std::string& what) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw usage_error("bad " + what + " '" + std::string(text) + "'");
    return value;
}

struct Shared {
    std::string index;
    bool quiet = false;
    std::uint64_t seed = 1;
};

struct BuildArgs {
    std::size_t k = 0;
    std::string input;
    std::string format = "reads";
    bool revcomp = false;
    bool split_unknown = false;
    std::string output;
    std::string alphabet = "ACGT";
};

struct QueryArgs {
    std::string op;
    std::string node;
    std::string symbol;
    std::size_t order = 0;
    bool has_order = false;
};

struct ValidateArgs {
    std::string input;
    std::string format = "reads";
    bool revcomp = false;
    bool split_unknown = false;
    std::string orders;
    std::size_t max_reports = 20;
};

struct BenchArgs {
    std::size_t queries = 20000;
    std::size_t repeats = 3;
    std::string op_mix = "default";
};

struct ContigArgs {
    std::size_t order = 0;
    std::size_t min_length = 0;
};

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw io_error("cannot open '" + path + "' for reading");
    return in;
}

// Reads the corpus and returns the sorted, dummy-closed matrix.
EdgeMatrix load_corpus(const std::string& path, const std::string& format_name, std::size_t k,
                       bool revcomp, bool split_unknown, const Alphabet& alphabet) {
    const InputFormat format = parse_input_format(format_name);
    std::ifstream in = open_input(path);
    EdgeMatrix edges(k, alphabet);
    if (format == InputFormat::kmers) {
        edges = read_kmers(in, k, alphabet);
        if (revcomp)
            edges = extract_edges(edges.to_strings(), k, true, alphabet);
    } else {
        std::vector<std::string> reads = format == InputFormat::fasta ? read_fasta(in) : read_lines(in);
        if (split_unknown)
            reads = split_at_unknown(reads, alphabet);
        edges = extract_edges(reads, k, revcomp, alphabet);
    }
    if (edges.empty())
        throw input_error("no (K+1)-mers extracted");
    return sort_edges(add_dummies(edges));
}

void print_node(std::ostream& out, const std::optional<NodeHandle>& v) {
    out << (v ? v->to_string() : std::string("NULL")) << '\n';
}

void print_nodes(std::ostream& out, const std::vector<NodeHandle>& vs) {
    if (vs.empty())
        out << "EMPTY\n";
    for (const NodeHandle& v : vs)
        out << v.to_string() << '\n';
}

char single_symbol(const std::string& text) {
    if (text.size() != 1)
        throw usage_error("--symbol takes a single character, got '" + text + "'");
    return text[0];
}

int cmd_build(const Shared& shared, const BuildArgs& args, std::ostream& out) {
    if (args.k == 0 || args.k > kMaxCliOrder)
        throw usage_error("--k must be in [1, " + std::to_string(kMaxCliOrder) + "]");
    const Alphabet alphabet(args.alphabet);
    const auto t0 = std::chrono::steady_clock::now();
    const EdgeMatrix matrix =
        load_corpus(args.input, args.format, args.k, args.revcomp, args.split_unknown, alphabet);
    const VarOrderIndex index = build_index(matrix);
    const auto t1 = std::chrono::steady_clock::now();
    const std::size_t bytes = [&] {
        std::ofstream file(args.output, std::ios::binary | std::ios::trunc);
        if (!file)
            throw io_error("cannot open '" + args.output + "' for writing");
        return save(index, file);
    }();
    if (shared.quiet)
        return kExitOk;
    const GraphStats s = index.boss().stats();
    const double seconds = std::chrono::duration<double>(t1 - t0).count();
    char ratio[32];
    std::snprintf(ratio, sizeof ratio, "%.3f", static_cast<double>(index.total_bits()) / s.bits_total());
    char wall[32];
    std::snprintf(wall, sizeof wall, "%.3f", seconds);
    out << "K          " << s.order << '\n'
        << "n_rows     " << s.n_rows << '\n'
        << "n_nodes    " << s.n_nodes << '\n'
        << "build_s    " << wall << '\n'
        << "bits_W     " << s.bits_w << '\n'
        << "bits_L     " << s.bits_last << '\n'
        << "bits_flags " << s.bits_flags << '\n'
        << "bits_C     " << s.bits_counts << '\n'
        << "bits_boss  " << s.bits_total() << '\n'
        << "bits_Lstar " << index.lstar_bits() << '\n'
        << "bits_total " << index.total_bits() << '\n'
        << "ratio      " << ratio << '\n'
        << "file_bytes " << bytes << '\n';
    return kExitOk;
}

int cmd_stats(const VarOrderIndex& index, std::ostream& out) {
    const GraphStats s = index.boss().stats();
    char ratio[32];
    std::snprintf(ratio, sizeof ratio, "%.3f", static_cast<double>(index.total_bits()) / s.bits_total());
    out << "K          " << s.order << '\n'
        << "alphabet   " << index.alphabet().symbols() << '\n'
        << "n_rows     " << s.n_rows << '\n'
        << "n_nodes    " << s.n_nodes << '\n'
        << "bits_W     " << s.bits_w << '\n'
        << "bits_L     " << s.bits_last << '\n'
        << "bits_flags " << s.bits_flags << '\n'
        << "bits_C     " << s.bits_counts << '\n'
        << "bits_boss  " << s.bits_total() << '\n'
        << "bits_Lstar " << index.lstar_bits() << '\n'
        << "bits_total " << index.total_bits() << '\n'
        << "ratio      " << ratio << '\n';
    return kExitOk;
}

int cmd_query(const VarOrderIndex& index, const QueryArgs& args, std::ostream& out,
              std::ostream& err) {
    const NodeHandle v = parse_node(args.node);
    if (!index.validate_handle(v)) {
        // label() runs the checked path and reports the failing invariant.
        try {
            (void)index.label(v);
        } catch (const handle_error& e) {
            err << "error: " << e.what() << '\n';
            return kExitData;
        }
        err << "error: invalid node handle " << v.to_string() << '\n';
        return kExitData;
    }
    const auto need_order = [&] {
        if (!args.has_order)
            throw usage_error("--op " + args.op + " needs --order");
        return args.order;
    };
    if (args.op == "forward") {
        print_node(out, index.forward(v, single_symbol(args.symbol)));
    } else if (args.op == "backward") {
        print_nodes(out, index.backward(v));
    } else if (args.op == "lastchar") {
        const auto c = index.lastchar(v);
        out << (c ? std::string(1, *c) : std::string("NONE")) << '\n';
    } else if (args.op == "label") {
        const std::string label = index.label(v);
        out << (label.empty() ? std::string("EMPTY") : label) << '\n';
    } else if (args.op == "shorter") {
        print_node(out, index.shorter(v, need_order()));
    } else if (args.op == "longer") {
        print_nodes(out, index.longer(v, need_order()));
    } else if (args.op == "maxlen") {
        const std::optional<char> a =
            args.symbol.empty() || args.symbol == "*" ? std::nullopt
                                                      : std::optional<char>(single_symbol(args.symbol));
        print_node(out, index.maxlen(v, a));
    } else {
        throw usage_error("unknown --op '" + args.op + "'");
    }
    return kExitOk;
}

int cmd_validate(const Shared& shared, const VarOrderIndex& index, const ValidateArgs& args,
                 std::ostream& out, std::ostream& err) {
    const std::size_t big_k = index.max_order();
    std::vector<std::size_t> orders;
    if (args.orders.empty()) {
        for (std::size_t k = 0; k <= big_k; ++k)
            orders.push_back(k);
    } else {
        orders = parse_orders(args.orders);
    }
    for (std::size_t k : orders)
        if (k > big_k)
            throw usage_error("order " + std::to_string(k) + " exceeds the index's K = "
                              + std::to_string(big_k));
    const EdgeMatrix matrix = load_corpus(args.input, args.format, big_k, args.revcomp,
                                          args.split_unknown, index.alphabet());
    if (matrix.rows() > kOracleRowCap)
        throw usage_error("corpus has " + std::to_string(matrix.rows())
                          + " rows, above the oracle cap of " + std::to_string(kOracleRowCap)
                          + "; validate a smaller sample of the reads instead");
    if (matrix.rows() != index.rows()) {
        err << "error: corpus gives " << matrix.rows() << " rows but the index has " << index.rows()
            << " (different corpus or --revcomp setting?)\n";
        return kExitData;
    }
    const MismatchReport report = oracle_compare_orders(index, matrix, orders, args.max_reports);
    for (const std::string& m : report.mismatches)
        out << "MISMATCH " << m << '\n';
    if (!shared.quiet || !report.empty())
        out << (report.empty() ? "OK" : "FAILED") << ": " << orders.size() << " orders, "
            << report.checks << " checks, " << report.mismatches.size() << " mismatches\n";
    return report.empty() ? kExitOk : kExitData;
}

int cmd_bench(const Shared& shared, const VarOrderIndex& index, const BenchArgs& args,
              std::ostream& out) {
    if (args.queries == 0)
        throw usage_error("--queries must be at least 1");
    if (args.op_mix != "default")
        throw usage_error("unknown --op-mix '" + args.op_mix + "'");
    BenchOptions options;
    options.queries = args.queries;
    options.seed = shared.seed;
    options.repeats = std::max<std::size_t>(1, args.repeats);
    const auto rows = run_bench(index, options);
    if (!shared.quiet)
        out << "# K=" << index.max_order() << " n_rows=" << index.rows()
            << " seed=" << shared.seed << " orders=[" << std::min<std::size_t>(8, index.max_order())
            << "," << index.max_order() << "]\n";
    print_bench(rows, out);
    return kExitOk;
}

int cmd_contigs(const VarOrderIndex& index, const ContigArgs& args, std::ostream& out) {
    if (args.order > index.max_order())
        throw usage_error("--order " + std::to_string(args.order) + " exceeds the index's K = "
                          + std::to_string(index.max_order()));
    for (const std::string& c : contigs(index, args.order, args.min_length))
        out << c << '\n';
    return kExitOk;
}

}  // namespace

NodeHandle parse_node(const std::string& text) {
    std::size_t parts[3];
    std::size_t start = 0;
    for (int t = 0; t < 3; ++t) {
        const std::size_t comma = t < 2 ? text.find(',', start) : text.size();
        if (comma == std::string::npos)
            throw input_error("node handle must be 'i,j,k', got '" + text + "'");
        const std::string_view piece(text.data() + start, comma - start);
        std::size_t value = 0;
        const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size())
            throw input_error("node handle must be 'i,j,k', got '" + text + "'");
        parts[t] = value;
        start = comma + 1;
    }
    return {parts[0], parts[1], parts[2]};
}

std::vector<std::size_t> parse_orders(const std::string& text) {
    std::vector<std::size_t> orders;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (const auto dots = item.find(".."); dots != std::string::npos) {
            const std::size_t lo = parse_size(std::string_view(item).substr(0, dots), "order");
            const std::size_t hi = parse_size(std::string_view(item).substr(dots + 2), "order");
            if (lo > hi)
                throw usage_error("empty order range '" + item + "'");
            for (std::size_t k = lo; k <= hi; ++k)
                orders.push_back(k);
        } else {
            orders.push_back(parse_size(item, "order"));
        }
    }
    if (orders.empty())
        throw usage_error("no orders given");
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
    return orders;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Variable-order succinct de Bruijn graph index", "vodbg"};
    app.require_subcommand(1);
    app.fallthrough();

    Shared shared;
    app.add_option("--index", shared.index, "index file (.vdbg)");
    app.add_flag("--quiet", shared.quiet, "suppress summaries");
    app.add_option("--seed", shared.seed, "random seed")->capture_default_str();

    BuildArgs build;
    auto* build_cmd = app.add_subcommand("build", "build an index from reads or (K+1)-mers");
    build_cmd->add_option("--k", build.k, "maximum order K")->required();
    build_cmd->add_option("--input", build.input, "input file")->required();
    build_cmd->add_option("--input-format", build.format, "fasta, reads or kmers")
        ->check(CLI::IsMember({"fasta", "reads", "kmers"}))
        ->capture_default_str();
    build_cmd->add_flag("--revcomp", build.revcomp, "also index reverse complements");
    build_cmd->add_flag("--split-unknown", build.split_unknown,
                        "split reads at symbols outside the alphabet instead of failing");
    build_cmd->add_option("--alphabet", build.alphabet, "symbols in rank order")->capture_default_str();
    build_cmd->add_option("--output", build.output, "index file to write")->required();

    QueryArgs query;
    auto* query_cmd = app.add_subcommand("query", "run one navigation operation");
    query_cmd->add_option("--op", query.op, "operation")
        ->required()
        ->check(CLI::IsMember({"forward", "backward", "lastchar", "label", "shorter", "longer", "maxlen"}));
    query_cmd->add_option("--node", query.node, "node handle i,j,k")->required();
    query_cmd->add_option("--symbol", query.symbol, "edge symbol (maxlen: omit or * for any)");
    auto* order_opt = query_cmd->add_option("--order", query.order, "target order");

    app.add_subcommand("stats", "print index statistics");

    ValidateArgs validate;
    auto* validate_cmd = app.add_subcommand("validate", "compare the index against the brute-force graph");
    validate_cmd->add_option("--input", validate.input, "corpus the index was built from")->required();
    validate_cmd->add_option("--input-format", validate.format, "fasta, reads or kmers")
        ->check(CLI::IsMember({"fasta", "reads", "kmers"}))
        ->capture_default_str();
    validate_cmd->add_flag("--revcomp", validate.revcomp, "corpus was built with --revcomp");
    validate_cmd->add_flag("--split-unknown", validate.split_unknown, "corpus was built with --split-unknown");
    validate_cmd->add_option("--orders", validate.orders, "orders to check, e.g. 0..3 or 1,4,8 (default all)");
    validate_cmd->add_option("--max-reports", validate.max_reports, "mismatches listed per order")
        ->capture_default_str();

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "time navigation operations on random nodes");
    bench_cmd->add_option("--queries", bench.queries, "queries per operation")->capture_default_str();
    bench_cmd->add_option("--repeats", bench.repeats, "timed passes; the fastest is reported")
        ->capture_default_str();
    bench_cmd->add_option("--op-mix", bench.op_mix, "operation mix")->capture_default_str();

    ContigArgs contig;
    auto* contigs_cmd = app.add_subcommand("contigs", "print maximal non-branching paths");
    contigs_cmd->add_option("--order", contig.order, "graph order k")->required();
    contigs_cmd->add_option("--min-length", contig.min_length, "shortest contig printed")
        ->capture_default_str();

    std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(reversed.begin(), reversed.end());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    query.has_order = order_opt->count() > 0;

    try {
        if (build_cmd->parsed())
            return cmd_build(shared, build, out);
        if (shared.index.empty())
            throw usage_error("--index is required");
        const VarOrderIndex index = load_file(shared.index);
        if (query_cmd->parsed())
            return cmd_query(index, query, out, err);
        if (validate_cmd->parsed())
            return cmd_validate(shared, index, validate, out, err);
        if (bench_cmd->parsed())
            return cmd_bench(shared, index, bench, out);
        if (contigs_cmd->parsed())
            return cmd_contigs(index, contig, out);
        return cmd_stats(index, out);
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const order_error& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const alphabet_error& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    }
}

}  // namespace vodbg
