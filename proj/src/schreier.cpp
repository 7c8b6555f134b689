#include "freeact/schreier.hpp"

#include <algorithm>

namespace freeact {

std::vector<int> SchreierGraph::tree_word(int vertex) const {
    std::vector<int> word;
    for (int x = vertex; x != root; x = tree_parent[x]) word.push_back(tree_letter[x]);
    std::reverse(word.begin(), word.end());
    return word;
}

SchreierGraph schreier_graph(const FiniteGroup& G, const GenVector& g, int root) {
    const int n = static_cast<int>(g.size());
    const int N = G.order();
    if (n < 1) throw std::invalid_argument("empty tuple");
    if (root < 0 || root >= N) throw std::invalid_argument("root out of range");

    SchreierGraph graph;
    graph.n = n;
    graph.vertex_count = N;
    graph.root = root;
    graph.edges.reserve(static_cast<size_t>(N) * n);
    for (int x = 0; x < N; x++)
        for (int i = 0; i < n; i++)
            graph.edges.push_back(SchreierEdge{x, i, G.mul(x, g[i]), false});

    // BFS spanning tree; forward edges tried before backward per coordinate
    graph.tree_parent.assign(static_cast<size_t>(N), -1);
    graph.tree_letter.assign(static_cast<size_t>(N), 0);
    std::vector<char> seen(static_cast<size_t>(N), 0);
    std::vector<int> queue = {root};
    seen[root] = 1;
    std::vector<int> tree_edge_of(static_cast<size_t>(N), -1);  // edge index into child
    for (size_t head = 0; head < queue.size(); head++) {
        const int x = queue[head];
        for (int i = 0; i < n; i++) {
            const int fwd = G.mul(x, g[i]);
            if (!seen[fwd]) {
                seen[fwd] = 1;
                graph.tree_parent[fwd] = x;
                graph.tree_letter[fwd] = i + 1;
                tree_edge_of[fwd] = x * n + i;
                queue.push_back(fwd);
            }
            const int bwd = G.mul(x, G.inv(g[i]));
            if (!seen[bwd]) {
                seen[bwd] = 1;
                graph.tree_parent[bwd] = x;
                graph.tree_letter[bwd] = -(i + 1);
                tree_edge_of[bwd] = bwd * n + i;  // edge bwd -> x carries letter i
                queue.push_back(bwd);
            }
        }
    }
    if (static_cast<int>(queue.size()) != N)
        throw std::invalid_argument("tuple does not generate the group (graph disconnected)");
    for (int x = 0; x < N; x++)
        if (tree_edge_of[x] >= 0) graph.edges[static_cast<size_t>(tree_edge_of[x])].tree = true;

    for (size_t e = 0; e < graph.edges.size(); e++) {
        const SchreierEdge& edge = graph.edges[e];
        if (edge.tree) continue;
        BasisCycle cycle;
        cycle.edge_index = static_cast<int>(e);
        cycle.word = graph.tree_word(edge.src);
        cycle.word.push_back(edge.coord + 1);
        auto back = graph.tree_word(edge.dst);
        for (auto it = back.rbegin(); it != back.rend(); ++it) cycle.word.push_back(-*it);
        graph.basis_cycles.push_back(std::move(cycle));
    }
    return graph;
}

std::int64_t covering_genus(const FiniteGroup& G, int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    return 1 + static_cast<std::int64_t>(G.order()) * (n - 1);
}

int word_sign(const std::vector<int>& word, const OrientVector& v) {
    int sign = 1;
    for (int letter : word) {
        const int c = letter > 0 ? letter : -letter;
        sign *= v[static_cast<size_t>(c - 1)];
    }
    return sign;
}

OrientationVerdict covering_orientable(const FiniteGroup& G, const MarkedVector& x, int root) {
    if (x.g.empty() || x.g.size() != x.v.size())
        throw std::invalid_argument("malformed marked vector");
    for (std::int8_t s : x.v)
        if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
    const SchreierGraph graph = schreier_graph(G, x.g, root);

    // sign of the tree word of each vertex
    const int N = G.order();
    std::vector<int8_t> tree_sign(static_cast<size_t>(N), 0);
    for (int vtx = 0; vtx < N; vtx++)
        tree_sign[vtx] = static_cast<int8_t>(word_sign(graph.tree_word(vtx), x.v));

    OrientationVerdict verdict;
    for (const BasisCycle& cycle : graph.basis_cycles) {
        if (word_sign(cycle.word, x.v) != 1) {
            verdict.orientable = false;
            verdict.witness_cycle = cycle;
            return verdict;
        }
    }
    verdict.orientable = true;
    // normalize so the identity maps to +1; tree words from a non-identity
    // root give a constant multiple of the character
    const int8_t base = tree_sign[static_cast<size_t>(G.identity())];
    std::vector<std::int8_t> values(tree_sign.size());
    for (size_t x = 0; x < values.size(); x++)
        values[x] = static_cast<std::int8_t>(tree_sign[x] * base);
    Character chr{std::move(values)};
    // all basis cycles evaluate to +1, so this is well-defined; verify anyway
    for (int a = 0; a < N; a++)
        for (int b = 0; b < N; b++)
            if (chr.value(G.mul(a, b)) != chr.value(a) * chr.value(b))
                throw std::logic_error("tree-word signs failed the homomorphism check");
    verdict.character = std::move(chr);
    return verdict;
}

std::string edge_list_text(const SchreierGraph& graph, const OrientVector& v) {
    if (static_cast<int>(v.size()) != graph.n)
        throw std::invalid_argument("sign vector length mismatch");
    std::string out;
    for (const SchreierEdge& e : graph.edges) {
        out += std::to_string(e.src);
        out += ' ';
        out += std::to_string(e.dst);
        out += ' ';
        out += std::to_string(e.coord + 1);
        out += ' ';
        out += v[static_cast<size_t>(e.coord)] > 0 ? "1" : "-1";
        out += '\n';
    }
    return out;
}

}  // namespace freeact
