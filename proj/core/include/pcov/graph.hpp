#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pcov {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input text could not be parsed; the message names the offending line.
struct ParseError : Error { using Error::Error; };

// Operation applied to a graph of the wrong shape (e.g. vine walk on a cycle).
struct ShapeError : Error { using Error::Error; };

// A documented precondition failed; the message names a witness vertex or edge.
struct ConditionError : Error { using Error::Error; };

// A search exceeded its explicit budget. Budgets fail loudly, never silently wrong.
struct ResourceError : Error { using Error::Error; };

// Simple undirected graph on dense vertex ids 0..n-1.
// Adjacency lists are kept sorted ascending; equality is structural.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    // Validates vertex range, rejects self-loops and duplicate edges.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const;
    int edge_count() const;
    // All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;
};

// Degree bookkeeping. A vertex is heavy when degree > 2, light otherwise;
// a heavy edge joins two heavy vertices.
struct GraphStats {
    int n = 0;
    int m = 0;
    int leaves = 0;
    int heavy_edges = 0;
    std::vector<int> heavy_vertices;
    std::vector<int> light_vertices;
};

GraphStats stats(const Graph& g);

// Most specific shape wins; a path is never reported as generalized_star,
// a star (every vine a single vertex) is never reported as plain generalized_star.
enum class Shape {
    path,
    cycle,
    star,
    generalized_star,
    tree,
    forest,
    connected_other,
    disconnected_other,
};

Shape classify(const Graph& g);
const char* shape_name(Shape s);

// Maximal path from a leaf through light vertices only, listed leaf first.
// The center is the heavy vertex adjacent to the inner end.
struct Vine {
    std::vector<int> vertices;
    int center = -1;
};

// All vines of g. Errors with ShapeError when g is a path or a cycle (no vine
// has a center there), or when some component is itself a bare path.
std::vector<Vine> vines(const Graph& g);

Graph complement(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

// Edge-list text: optional first non-comment line "n <count>", then one
// "u v" pair per line; '#' starts a comment line. Errors name line numbers.
Graph parse_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

// graph6 (n <= 62 only): header byte 63+n, then the upper triangle
// column-major, 6 bits per byte, each byte offset by 63.
Graph parse_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

// True when the text looks like a one-line graph6 record of consistent length.
bool looks_like_graph6(const std::string& text);

// Graphviz export. vertex_labels (optional, size n) annotates nodes;
// highlight_paths draws the given vertex sequences as bold colored edges.
std::string to_dot(const Graph& g,
                   const std::vector<std::string>* vertex_labels = nullptr,
                   const std::vector<std::vector<int>>* highlight_paths = nullptr);

}  // namespace pcov
