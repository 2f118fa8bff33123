#pragma once

#include <string>
#include <vector>

#include "pcov/graph.hpp"

namespace pcov {

// Vertex-disjoint paths covering all vertices of a host graph. Each path is a
// vertex sequence whose consecutive entries must be adjacent in the host.
struct PathCovering {
    std::vector<std::vector<int>> paths;
    int host_n = 0;
};

// Nondecreasing vertex counts of a covering's paths; sums to host_n.
using PathSequence = std::vector<int>;

PathSequence path_sequence(const PathCovering& c);

// Checks disjointness, coverage and host adjacency. Returns true when valid;
// otherwise false with a reason in *why when provided.
bool validate_covering(const Graph& host, const PathCovering& c, std::string* why = nullptr);

struct TreeCoverResult {
    int p = 0;
    PathCovering witness;
};

// Minimum path covering of a tree in linear time, by repeatedly reducing a
// vertex whose neighbors are all leaves except exactly one: with one leaf
// neighbor the leaf is absorbed, with k >= 2 the vertex and its leaves split
// off as one path plus k-2 singletons. Remainders of diameter <= 2 are solved
// directly. The witness is rebuilt by replaying the reduction trace backwards.
TreeCoverResult tree_path_cover(const Graph& t);

struct CoverBounds {
    int lower = 0;  // leaves - heavy_edges - 1
    int upper = 0;  // leaves - 1
};

// Bounds for trees with at least one edge; ShapeError on non-trees and on the
// single-vertex tree (which has no leaf in the degree-1 sense).
CoverBounds formula_bounds(const Graph& t);

// Inputs of the closed-form count below: s = heavy vertices with exactly one
// light neighbor, t = maximum matching size of the subgraph they induce.
struct Theorem7Data {
    int s = 0;
    int t = 0;
    int leaves = 0;
    int heavy_edges = 0;
    std::vector<int> s_vertices;
};

struct Theorem7Result {
    int p = 0;
    Theorem7Data data;
};

// Closed-form minimum path covering count for trees in which every heavy
// vertex has at least one light neighbor: p = leaves - heavy_edges + s - t - 1.
// The induced subgraph on S is a forest, so a leaf-stripping greedy matching
// is exact. ConditionError names a heavy vertex with no light neighbor.
Theorem7Result theorem7_path_cover(const Graph& t);

// No two heavy vertices are adjacent.
bool is_2_sparse(const Graph& g);

// Every heavy vertex has at least two light neighbors.
bool is_general_2_sparse(const Graph& g);

// Closed-form count p = leaves + m - heavy_edges - n for connected non-cycle
// graphs with at least one edge where every heavy vertex has >= 3 light
// neighbors. ConditionError (with witness) otherwise.
int theorem12_path_cover(const Graph& g);

// Replaces each tree edge by a clique: edge i (in edges() order) of order
// orders[i] keeps both endpoints and adds orders[i]-2 fresh vertices, appended
// after the original ids in edge order. Orders below 2 are ConditionErrors.
Graph expand_tree(const Graph& t, const std::vector<int>& orders);

struct Theorem13Result {
    int p = 0;           // leaves(t) - 1
    Graph expansion;
    PathCovering witness;
};

// Minimum path covering of a tree-of-cliques expansion of a 2-sparse tree with
// >= 2 leaves: count equals leaves - 1, witnessed by threading the tree's
// minimum covering through each clique (insert fresh vertices between used
// endpoints, append them at the light endpoint's path end otherwise).
Theorem13Result theorem13_path_cover(const Graph& t, const std::vector<int>& orders);

}  // namespace pcov
