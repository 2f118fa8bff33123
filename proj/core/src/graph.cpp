#include "pcov/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace pcov {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n <= 0) throw ConditionError("graph needs at least one vertex");
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw ConditionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") out of range for n=" + std::to_string(n));
        }
        if (u == v) throw ConditionError("self-loop at vertex " + std::to_string(u));
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        std::sort(g.adj[v].begin(), g.adj[v].end());
        if (std::adjacent_find(g.adj[v].begin(), g.adj[v].end()) != g.adj[v].end()) {
            throw ConditionError("duplicate edge at vertex " + std::to_string(v));
        }
    }
    return g;
}

bool Graph::has_edge(int u, int v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

int Graph::edge_count() const {
    long long total = 0;
    for (const auto& nb : adj) total += static_cast<long long>(nb.size());
    return static_cast<int>(total / 2);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u) {
        for (int v : adj[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

GraphStats stats(const Graph& g) {
    GraphStats s;
    s.n = g.n;
    s.m = g.edge_count();
    for (int v = 0; v < g.n; ++v) {
        int d = g.degree(v);
        if (d == 1) ++s.leaves;
        if (d > 2) {
            s.heavy_vertices.push_back(v);
        } else {
            s.light_vertices.push_back(v);
        }
    }
    for (auto [u, v] : g.edges()) {
        if (g.degree(u) > 2 && g.degree(v) > 2) ++s.heavy_edges;
    }
    return s;
}

namespace {

std::vector<int> component_ids(const Graph& g, int* count) {
    std::vector<int> comp(g.n, -1);
    int c = 0;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] != -1) continue;
        std::queue<int> q;
        q.push(s);
        comp[s] = c;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.adj[v]) {
                if (comp[w] == -1) {
                    comp[w] = c;
                    q.push(w);
                }
            }
        }
        ++c;
    }
    *count = c;
    return comp;
}

}  // namespace

bool is_connected(const Graph& g) {
    int c = 0;
    component_ids(g, &c);
    return c == 1;
}

bool is_tree(const Graph& g) {
    return is_connected(g) && g.edge_count() == g.n - 1;
}

Shape classify(const Graph& g) {
    int comp_count = 0;
    auto comp = component_ids(g, &comp_count);
    int m = g.edge_count();
    if (comp_count > 1) {
        // Forest iff every component is a tree, i.e. no cycle anywhere.
        return (m == g.n - comp_count) ? Shape::forest : Shape::disconnected_other;
    }
    int max_deg = 0;
    for (int v = 0; v < g.n; ++v) max_deg = std::max(max_deg, g.degree(v));
    if (max_deg <= 2) {
        if (m == g.n - 1) return Shape::path;  // includes the single vertex
        if (m == g.n) return Shape::cycle;
        return Shape::connected_other;  // unreachable for simple graphs
    }
    if (m != g.n - 1) return Shape::connected_other;
    // Tree with at least one heavy vertex.
    int heavy = 0;
    int hub = -1;
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) > 2) {
            ++heavy;
            hub = v;
        }
    }
    if (heavy != 1) return Shape::tree;
    // Exactly one heavy vertex: vines all equal -> generalized star; all of
    // vertex count one -> star.
    auto vs = vines(g);
    bool equal = true;
    for (const auto& vine : vs) {
        if (vine.vertices.size() != vs.front().vertices.size()) equal = false;
        if (vine.center != hub) equal = false;  // defensive; cannot happen
    }
    if (!equal) return Shape::tree;
    return vs.front().vertices.size() == 1 ? Shape::star : Shape::generalized_star;
}

const char* shape_name(Shape s) {
    switch (s) {
        case Shape::path: return "path";
        case Shape::cycle: return "cycle";
        case Shape::star: return "star";
        case Shape::generalized_star: return "generalized_star";
        case Shape::tree: return "tree";
        case Shape::forest: return "forest";
        case Shape::connected_other: return "connected_other";
        case Shape::disconnected_other: return "disconnected_other";
    }
    return "?";
}

std::vector<Vine> vines(const Graph& g) {
    int max_deg = 0;
    for (int v = 0; v < g.n; ++v) max_deg = std::max(max_deg, g.degree(v));
    if (max_deg <= 2 && is_connected(g)) {
        throw ShapeError("vines undefined on a path or cycle");
    }
    std::vector<Vine> out;
    for (int leaf = 0; leaf < g.n; ++leaf) {
        if (g.degree(leaf) != 1) continue;
        Vine vine;
        int prev = -1;
        int cur = leaf;
        while (true) {
            if (g.degree(cur) > 2) {
                vine.center = cur;
                break;
            }
            vine.vertices.push_back(cur);
            int next = -1;
            for (int w : g.adj[cur]) {
                if (w != prev) next = w;
            }
            if (next == -1) {
                throw ShapeError("component of leaf " + std::to_string(leaf) +
                                 " is a bare path; its vine has no center");
            }
            prev = cur;
            cur = next;
        }
        out.push_back(std::move(vine));
    }
    return out;
}

Graph complement(const Graph& g) {
    Graph c;
    c.n = g.n;
    c.adj.assign(g.n, {});
    for (int u = 0; u < g.n; ++u) {
        auto it = g.adj[u].begin();
        for (int v = 0; v < g.n; ++v) {
            while (it != g.adj[u].end() && *it < v) ++it;
            if (v == u) continue;
            if (it != g.adj[u].end() && *it == v) continue;
            c.adj[u].push_back(v);
        }
    }
    return c;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int declared_n = -1;
    bool saw_content = false;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    int max_vertex = -1;
    while (std::getline(in, line)) {
        ++line_no;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::string a, b, extra;
        ls >> a >> b;
        bool header = (a == "n" && !saw_content);
        saw_content = true;
        auto parse_int = [&](const std::string& tok) {
            size_t pos = 0;
            int value = 0;
            try {
                value = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw ParseError("line " + std::to_string(line_no) + ": malformed token '" +
                                 tok + "'");
            }
            if (pos != tok.size() || value < 0) {
                throw ParseError("line " + std::to_string(line_no) + ": malformed token '" +
                                 tok + "'");
            }
            return value;
        };
        if (header) {
            if (b.empty()) throw ParseError("line " + std::to_string(line_no) + ": 'n' needs a count");
            declared_n = parse_int(b);
            if (declared_n <= 0) {
                throw ParseError("line " + std::to_string(line_no) + ": vertex count must be positive");
            }
            if (ls >> extra) throw ParseError("line " + std::to_string(line_no) + ": trailing token '" + extra + "'");
            continue;
        }
        if (b.empty()) throw ParseError("line " + std::to_string(line_no) + ": expected 'u v'");
        if (ls >> extra) throw ParseError("line " + std::to_string(line_no) + ": trailing token '" + extra + "'");
        int u = parse_int(a);
        int v = parse_int(b);
        if (u == v) throw ParseError("line " + std::to_string(line_no) + ": self-loop at " + a);
        if (declared_n != -1 && (u >= declared_n || v >= declared_n)) {
            throw ParseError("line " + std::to_string(line_no) + ": vertex exceeds declared n=" +
                             std::to_string(declared_n));
        }
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
            throw ParseError("line " + std::to_string(line_no) + ": duplicate edge " + a + " " + b);
        }
        edges.emplace_back(u, v);
        max_vertex = std::max({max_vertex, u, v});
    }
    if (!saw_content) throw ParseError("empty input: no header and no edges");
    int n = declared_n != -1 ? declared_n : max_vertex + 1;
    return Graph::from_edges(n, edges);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.n << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

namespace {

size_t graph6_body_len(int n) {
    return (static_cast<size_t>(n) * (n - 1) / 2 + 5) / 6;
}

}  // namespace

Graph parse_graph6(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    if (s.empty()) throw ParseError("empty graph6 record");
    int n = static_cast<int>(static_cast<unsigned char>(s[0])) - 63;
    if (n < 1 || n > 62) throw ParseError("graph6: only 1 <= n <= 62 supported");
    if (s.size() != 1 + graph6_body_len(n)) {
        throw ParseError("graph6: record length does not match n=" + std::to_string(n));
    }
    std::vector<std::pair<int, int>> edges;
    size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            unsigned char ch = static_cast<unsigned char>(s[1 + bit / 6]);
            if (ch < 63 || ch > 126) throw ParseError("graph6: byte out of range");
            int b = (ch - 63) >> (5 - bit % 6) & 1;
            if (b) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edges(n, edges);
}

std::string to_graph6(const Graph& g) {
    if (g.n < 1 || g.n > 62) throw ConditionError("graph6: only 1 <= n <= 62 supported");
    std::string out;
    out.push_back(static_cast<char>(63 + g.n));
    size_t body = graph6_body_len(g.n);
    std::vector<int> groups(body, 0);
    size_t bit = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (g.has_edge(i, j)) groups[bit / 6] |= 1 << (5 - bit % 6);
        }
    }
    for (int v : groups) out.push_back(static_cast<char>(63 + v));
    return out;
}

bool looks_like_graph6(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    if (s.empty() || s.find('\n') != std::string::npos) return false;
    for (char c : s) {
        unsigned char u = static_cast<unsigned char>(c);
        if (u < 63 || u > 126) return false;
    }
    int n = static_cast<int>(static_cast<unsigned char>(s[0])) - 63;
    if (n < 1 || n > 62) return false;
    return s.size() == 1 + graph6_body_len(n);
}

std::string to_dot(const Graph& g, const std::vector<std::string>* vertex_labels,
                   const std::vector<std::vector<int>>* highlight_paths) {
    static const char* palette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
                                    "#ff7f00", "#a65628", "#f781bf", "#999999"};
    std::vector<std::vector<int>> path_color(g.n);
    for (auto& row : path_color) row.assign(g.n, -1);
    if (highlight_paths) {
        for (size_t i = 0; i < highlight_paths->size(); ++i) {
            const auto& p = (*highlight_paths)[i];
            for (size_t j = 0; j + 1 < p.size(); ++j) {
                path_color[p[j]][p[j + 1]] = static_cast<int>(i % 8);
                path_color[p[j + 1]][p[j]] = static_cast<int>(i % 8);
            }
        }
    }
    std::ostringstream out;
    out << "graph g {\n  node [shape=circle];\n";
    for (int v = 0; v < g.n; ++v) {
        out << "  " << v;
        if (vertex_labels && v < static_cast<int>(vertex_labels->size())) {
            out << " [label=\"" << (*vertex_labels)[v] << "\"]";
        }
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) {
        out << "  " << u << " -- " << v;
        if (path_color[u][v] >= 0) {
            out << " [penwidth=2.5, color=\"" << palette[path_color[u][v]] << "\"]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace pcov
