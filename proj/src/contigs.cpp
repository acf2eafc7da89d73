#include "vodbg/contigs.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <utility>

#include "vodbg/errors.hpp"

namespace vodbg {

namespace {

struct PathNode {
    NodeHandle handle;
    std::string label;
    std::vector<std::size_t> succ;
    std::vector<std::size_t> pred;
};

}  // namespace

std::vector<std::string> contigs(const VarOrderIndex& index, std::size_t k, std::size_t min_length) {
    if (k > index.max_order())
        throw order_error("contigs: order " + std::to_string(k) + " exceeds K = "
                          + std::to_string(index.max_order()));
    if (k == 0)
        return {};

    std::vector<PathNode> graph;
    std::unordered_map<std::size_t, std::size_t> by_start;  // interval start -> graph index
    for (const NodeHandle& v : index.nodes(k)) {
        std::string lab = index.label(v);
        if (lab.find(Alphabet::kTerminator) != std::string::npos)
            continue;
        by_start.emplace(v.i, graph.size());
        graph.push_back({v, std::move(lab), {}, {}});
    }
    const std::string& symbols = index.alphabet().symbols();
    for (std::size_t x = 0; x < graph.size(); ++x) {
        for (char a : symbols) {
            const auto w = index.forward(graph[x].handle, a);
            if (!w)
                continue;
            const auto it = by_start.find(w->i);
            if (it == by_start.end())
                continue;
            graph[x].succ.push_back(it->second);
            graph[it->second].pred.push_back(x);
        }
    }

    auto continues_path = [&](std::size_t x) {
        const auto& p = graph[x].pred;
        return p.size() == 1 && p[0] != x && graph[p[0]].succ.size() == 1;
    };

    std::vector<std::pair<std::size_t, std::string>> found;  // (start row, sequence)
    std::vector<bool> visited(graph.size(), false);
    auto walk = [&](std::size_t start) {
        std::string seq = graph[start].label;
        visited[start] = true;
        std::size_t cur = start;
        while (graph[cur].succ.size() == 1) {
            const std::size_t next = graph[cur].succ[0];
            if (next == start || !continues_path(next))
                break;
            seq.push_back(graph[next].label.back());
            visited[next] = true;
            cur = next;
        }
        found.emplace_back(graph[start].handle.i, std::move(seq));
    };

    for (std::size_t x = 0; x < graph.size(); ++x)
        if (!continues_path(x))
            walk(x);
    // Whatever is left lies on cycles made only of path-continuing nodes.
    for (std::size_t x = 0; x < graph.size(); ++x)
        if (!visited[x])
            walk(x);

    std::sort(found.begin(), found.end());
    std::vector<std::string> out;
    for (auto& [start, seq] : found)
        if (seq.size() >= min_length)
            out.push_back(std::move(seq));
    return out;
}

}  // namespace vodbg
