#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "freeact/group.hpp"
#include "freeact/marked.hpp"

namespace freeact {

// Directed labeled edge x -> x*g_coord.
struct SchreierEdge {
    int src = 0;
    int coord = 0;  // 0-based tuple coordinate
    int dst = 0;
    bool tree = false;
};

// A non-tree edge together with the loop word it induces: tree path to src,
// the edge letter, tree path from dst back to the root. Letters are signed
// 1-based coordinates (-c means the inverse of coordinate c-1).
struct BasisCycle {
    int edge_index = 0;
    std::vector<int> word;
};

// The graph on the group elements with an edge x -> x*g_i per coordinate,
// plus a BFS spanning tree (coordinate-order tie-breaking, forward edges
// before backward) and the induced cycle basis. Connected iff g generates.
struct SchreierGraph {
    int n = 0;
    int vertex_count = 0;
    int root = 0;
    std::vector<SchreierEdge> edges;       // vertex-major, coordinate-minor
    std::vector<int> tree_parent;          // -1 at the root
    std::vector<int> tree_letter;          // signed letter from parent to vertex
    std::vector<BasisCycle> basis_cycles;  // size 1 + |G|(n-1)

    // Letters of the tree path root -> vertex.
    std::vector<int> tree_word(int vertex) const;
};

SchreierGraph schreier_graph(const FiniteGroup& G, const GenVector& g, int root = 0);

// 1 + |G|(n-1); equals the cycle-basis size of any Schreier graph on a
// generating n-vector.
std::int64_t covering_genus(const FiniteGroup& G, int n);

struct OrientationVerdict {
    bool orientable = false;
    std::optional<Character> character;      // present when orientable
    std::optional<BasisCycle> witness_cycle;  // a sign -1 cycle otherwise
};

// Decides orientability of the covering directly from the cycle basis: the
// covering is orientable iff every basis cycle has sign +1 under the word
// evaluation letter c -> v_c. When orientable, the character x -> sign of
// the tree word of x is returned (and verified to be a homomorphism).
OrientationVerdict covering_orientable(const FiniteGroup& G, const MarkedVector& x,
                                       int root = 0);

// Sign of a letter word under v (inverse letters have the same sign).
int word_sign(const std::vector<int>& word, const OrientVector& v);

// Plain edge list, one line "src dst coord sign" per edge; coords and the
// sign column come from the marked vector (1-based coordinate, sign of that
// coordinate).
std::string edge_list_text(const SchreierGraph& graph, const OrientVector& v);

}  // namespace freeact
