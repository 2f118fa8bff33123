#include "pcov/path_cover.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>

namespace pcov {

PathSequence path_sequence(const PathCovering& c) {
    PathSequence seq;
    seq.reserve(c.paths.size());
    for (const auto& p : c.paths) seq.push_back(static_cast<int>(p.size()));
    std::sort(seq.begin(), seq.end());
    return seq;
}

bool validate_covering(const Graph& host, const PathCovering& c, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (c.host_n != host.n) return fail("host_n mismatch");
    std::vector<char> used(host.n, 0);
    for (const auto& p : c.paths) {
        if (p.empty()) return fail("empty path");
        for (size_t i = 0; i < p.size(); ++i) {
            int v = p[i];
            if (v < 0 || v >= host.n) return fail("vertex out of range");
            if (used[v]) return fail("vertex " + std::to_string(v) + " covered twice");
            used[v] = 1;
            if (i > 0 && !host.has_edge(p[i - 1], p[i])) {
                return fail("non-edge " + std::to_string(p[i - 1]) + "-" + std::to_string(p[i]));
            }
        }
    }
    for (int v = 0; v < host.n; ++v) {
        if (!used[v]) return fail("vertex " + std::to_string(v) + " uncovered");
    }
    return true;
}

namespace {

// One reduction step. absorb=true: leaf z deleted, its neighbor v keeps the
// count unchanged. absorb=false: v and all its leaves deleted, count grows by
// leaves.size()-1.
struct TraceStep {
    bool absorb;
    int v;
    std::vector<int> leaves;
};

}  // namespace

TreeCoverResult tree_path_cover(const Graph& t) {
    if (!is_tree(t)) throw ShapeError("tree_path_cover requires a tree");
    int n = t.n;
    TreeCoverResult res;
    res.witness.host_n = n;
    if (n == 1) {
        res.p = 1;
        res.witness.paths = {{0}};
        return res;
    }

    std::vector<int> deg(n), leaf_nb(n, 0);
    std::vector<char> alive(n, 1);
    for (int v = 0; v < n; ++v) deg[v] = t.degree(v);
    for (int v = 0; v < n; ++v) {
        for (int w : t.adj[v]) {
            if (deg[w] == 1) ++leaf_nb[v];
        }
    }

    // Reducible: all live neighbors but exactly one are leaves.
    auto is_candidate = [&](int v) {
        return alive[v] && deg[v] >= 2 && leaf_nb[v] == deg[v] - 1;
    };

    std::queue<int> work;
    for (int v = 0; v < n; ++v) {
        if (is_candidate(v)) work.push(v);
    }

    // Fires exactly once per vertex (degrees only decrease).
    auto on_new_leaf = [&](int x) {
        for (int w : t.adj[x]) {
            if (!alive[w]) continue;
            ++leaf_nb[w];
            if (is_candidate(w)) work.push(w);
        }
    };

    std::vector<TraceStep> trace;
    while (!work.empty()) {
        int v = work.front();
        work.pop();
        if (!is_candidate(v)) continue;
        int u = -1;
        std::vector<int> leaves;
        for (int w : t.adj[v]) {
            if (!alive[w]) continue;
            if (deg[w] == 1) {
                leaves.push_back(w);
            } else {
                u = w;
            }
        }
        if (u == -1 || leaves.empty()) throw Error("internal: bad reduction candidate");
        if (leaves.size() == 1) {
            int z = leaves[0];
            alive[z] = 0;
            --deg[v];
            --leaf_nb[v];
            trace.push_back({true, v, {z}});
            if (deg[v] == 1) on_new_leaf(v);
        } else {
            trace.push_back({false, v, leaves});
            for (int z : leaves) alive[z] = 0;
            alive[v] = 0;
            --deg[u];
            if (deg[u] == 1) {
                on_new_leaf(u);
            } else if (is_candidate(u)) {
                work.push(u);
            }
        }
    }

    // No candidate left: the remaining tree has diameter at most 2.
    std::vector<int> rest;
    for (int v = 0; v < n; ++v) {
        if (alive[v]) rest.push_back(v);
    }
    std::vector<std::deque<int>> paths;
    if (rest.size() == 1) {
        paths.push_back({rest[0]});
    } else if (rest.size() == 2) {
        paths.push_back({rest[0], rest[1]});
    } else {
        int hub = -1;
        for (int v : rest) {
            if (deg[v] == static_cast<int>(rest.size()) - 1) hub = v;
        }
        if (hub == -1) throw Error("internal: remainder is not a star");
        std::vector<int> tips;
        for (int v : rest) {
            if (v != hub) tips.push_back(v);
        }
        paths.push_back({tips[0], hub, tips[1]});
        for (size_t i = 2; i < tips.size(); ++i) paths.push_back({tips[i]});
    }

    // Undo the trace. A leaf of the intermediate tree is always an end of its
    // path (or a singleton), so each absorbed leaf extends at its neighbor.
    std::vector<int> path_of(n, -1);
    for (size_t i = 0; i < paths.size(); ++i) {
        path_of[paths[i].front()] = static_cast<int>(i);
        path_of[paths[i].back()] = static_cast<int>(i);
    }
    for (auto it = trace.rbegin(); it != trace.rend(); ++it) {
        if (it->absorb) {
            int v = it->v;
            int z = it->leaves[0];
            int pi = path_of[v];
            if (pi == -1) throw Error("internal: absorbed vertex lost");
            auto& p = paths[pi];
            if (p.front() == v) {
                p.push_front(z);
            } else if (p.back() == v) {
                p.push_back(z);
            } else {
                throw Error("internal: absorbed vertex not a path end");
            }
            path_of[z] = pi;
        } else {
            const auto& leaves = it->leaves;
            paths.push_back({leaves[0], it->v, leaves[1]});
            path_of[leaves[0]] = static_cast<int>(paths.size()) - 1;
            path_of[leaves[1]] = static_cast<int>(paths.size()) - 1;
            for (size_t i = 2; i < leaves.size(); ++i) {
                paths.push_back({leaves[i]});
                path_of[leaves[i]] = static_cast<int>(paths.size()) - 1;
            }
        }
    }

    res.p = static_cast<int>(paths.size());
    res.witness.paths.reserve(paths.size());
    for (auto& p : paths) res.witness.paths.emplace_back(p.begin(), p.end());
    std::string why;
    if (!validate_covering(t, res.witness, &why)) {
        throw Error("internal: invalid witness covering: " + why);
    }
    return res;
}

CoverBounds formula_bounds(const Graph& t) {
    if (!is_tree(t)) throw ShapeError("formula_bounds requires a tree");
    if (t.n < 2) throw ShapeError("formula_bounds requires at least one edge");
    GraphStats s = stats(t);
    return {s.leaves - s.heavy_edges - 1, s.leaves - 1};
}

namespace {

// Exact maximum matching on a forest by leaf stripping: a vertex of degree
// <= 1 can always be matched to its unique remaining neighbor, if any.
int forest_matching(int n, const std::vector<std::vector<int>>& adj) {
    std::vector<int> deg(n);
    std::vector<char> gone(n, 0);
    std::queue<int> q;
    for (int v = 0; v < n; ++v) {
        deg[v] = static_cast<int>(adj[v].size());
        if (deg[v] <= 1) q.push(v);
    }
    int matched = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (gone[v]) continue;
        gone[v] = 1;
        int mate = -1;
        for (int w : adj[v]) {
            if (!gone[w]) mate = w;
        }
        if (mate == -1) continue;
        gone[mate] = 1;
        ++matched;
        for (int w : adj[mate]) {
            if (gone[w]) continue;
            if (--deg[w] <= 1) q.push(w);
        }
    }
    return matched;
}

}  // namespace

Theorem7Result theorem7_path_cover(const Graph& t) {
    if (!is_tree(t)) throw ShapeError("theorem7_path_cover requires a tree");
    if (t.n < 2) throw ShapeError("theorem7_path_cover requires at least one edge");
    GraphStats st = stats(t);
    Theorem7Result res;
    res.data.leaves = st.leaves;
    res.data.heavy_edges = st.heavy_edges;
    for (int v : st.heavy_vertices) {
        int light = 0;
        for (int w : t.adj[v]) {
            if (t.degree(w) <= 2) ++light;
        }
        if (light == 0) {
            throw ConditionError("heavy vertex " + std::to_string(v) +
                                 " has no light neighbor");
        }
        if (light == 1) res.data.s_vertices.push_back(v);
    }
    res.data.s = static_cast<int>(res.data.s_vertices.size());
    // The marked vertices induce a forest inside the tree, where the greedy
    // matching is exact.
    std::map<int, int> id;
    for (int v : res.data.s_vertices) id[v] = static_cast<int>(id.size());
    std::vector<std::vector<int>> adj(id.size());
    for (int v : res.data.s_vertices) {
        for (int w : t.adj[v]) {
            auto it = id.find(w);
            if (it != id.end()) adj[id[v]].push_back(it->second);
        }
    }
    res.data.t = forest_matching(static_cast<int>(id.size()), adj);
    res.p = res.data.leaves - res.data.heavy_edges + res.data.s - res.data.t - 1;
    return res;
}

bool is_2_sparse(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        if (g.degree(u) > 2 && g.degree(v) > 2) return false;
    }
    return true;
}

bool is_general_2_sparse(const Graph& g) {
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) <= 2) continue;
        int light = 0;
        for (int w : g.adj[v]) {
            if (g.degree(w) <= 2) ++light;
        }
        if (light < 2) return false;
    }
    return true;
}

int theorem12_path_cover(const Graph& g) {
    if (!is_connected(g)) {
        throw ConditionError("theorem12_path_cover requires a connected graph");
    }
    if (classify(g) == Shape::cycle) throw ConditionError("theorem12_path_cover excludes cycles");
    GraphStats st = stats(g);
    if (st.m < 1) throw ConditionError("theorem12_path_cover requires at least one edge");
    for (int v : st.heavy_vertices) {
        int light = 0;
        for (int w : g.adj[v]) {
            if (g.degree(w) <= 2) ++light;
        }
        if (light < 3) {
            throw ConditionError("heavy vertex " + std::to_string(v) + " has only " +
                                 std::to_string(light) + " light neighbors (needs 3)");
        }
    }
    return st.leaves + st.m - st.heavy_edges - g.n;
}

namespace {

struct Expansion {
    Graph g;
    std::vector<std::vector<int>> fresh;  // per original edge, inserted vertices
};

Expansion expand_tree_impl(const Graph& t, const std::vector<int>& orders) {
    if (!is_tree(t)) throw ShapeError("expand_tree requires a tree");
    auto es = t.edges();
    if (orders.size() != es.size()) {
        throw ConditionError("expected " + std::to_string(es.size()) + " block orders, got " +
                             std::to_string(orders.size()));
    }
    Expansion ex;
    ex.fresh.resize(es.size());
    std::vector<std::pair<int, int>> edges;
    int next = t.n;
    for (size_t i = 0; i < es.size(); ++i) {
        if (orders[i] < 2) {
            throw ConditionError("block order " + std::to_string(orders[i]) + " at edge " +
                                 std::to_string(es[i].first) + "-" +
                                 std::to_string(es[i].second) + " (orders start at 2)");
        }
        std::vector<int> block = {es[i].first, es[i].second};
        for (int q = 0; q < orders[i] - 2; ++q) {
            block.push_back(next);
            ex.fresh[i].push_back(next);
            ++next;
        }
        for (size_t a = 0; a < block.size(); ++a) {
            for (size_t b = a + 1; b < block.size(); ++b) {
                edges.emplace_back(block[a], block[b]);
            }
        }
    }
    ex.g = Graph::from_edges(next, edges);
    return ex;
}

}  // namespace

Graph expand_tree(const Graph& t, const std::vector<int>& orders) {
    return expand_tree_impl(t, orders).g;
}

Theorem13Result theorem13_path_cover(const Graph& t, const std::vector<int>& orders) {
    if (!is_tree(t)) throw ShapeError("theorem13_path_cover requires a tree");
    if (t.n < 2) throw ConditionError("theorem13_path_cover requires at least one edge");
    for (auto [u, v] : t.edges()) {
        if (t.degree(u) > 2 && t.degree(v) > 2) {
            throw ConditionError("tree has adjacent branch vertices " + std::to_string(u) +
                                 "-" + std::to_string(v));
        }
    }
    Expansion ex = expand_tree_impl(t, orders);
    TreeCoverResult base = tree_path_cover(t);

    // Thread the tree witness through the blocks: a used tree edge takes its
    // block's inserted vertices in between (any order works, the block is a
    // clique); an unused edge appends its inserted vertices at whichever
    // endpoint sits at the end of a path, which the tree witness provides.
    auto es = t.edges();
    std::map<std::pair<int, int>, int> edge_id;
    for (size_t i = 0; i < es.size(); ++i) edge_id[es[i]] = static_cast<int>(i);

    std::vector<char> edge_used(es.size(), 0);
    std::vector<std::deque<int>> paths;
    for (const auto& p : base.witness.paths) {
        std::deque<int> out;
        out.push_back(p[0]);
        for (size_t i = 1; i < p.size(); ++i) {
            int e = edge_id.at({std::min(p[i - 1], p[i]), std::max(p[i - 1], p[i])});
            edge_used[e] = 1;
            for (int x : ex.fresh[e]) out.push_back(x);
            out.push_back(p[i]);
        }
        paths.push_back(std::move(out));
    }

    std::vector<int> path_of(t.n, -1);
    for (size_t i = 0; i < paths.size(); ++i) {
        for (int v : paths[i]) {
            if (v < t.n) path_of[v] = static_cast<int>(i);
        }
    }
    for (size_t e = 0; e < es.size(); ++e) {
        if (edge_used[e] || ex.fresh[e].empty()) continue;
        auto [a, b] = es[e];
        if (t.degree(b) <= 2 && t.degree(a) > 2) std::swap(a, b);  // light endpoint first
        bool placed = false;
        for (int cand : {a, b}) {
            auto& p = paths[path_of[cand]];
            if (p.front() == cand) {
                for (int x : ex.fresh[e]) p.push_front(x);
                placed = true;
            } else if (p.back() == cand) {
                for (int x : ex.fresh[e]) p.push_back(x);
                placed = true;
            }
            if (placed) break;
        }
        if (!placed) throw Error("internal: no endpoint of a skipped edge ends a path");
    }

    Theorem13Result res;
    res.p = base.p;
    res.expansion = std::move(ex.g);
    res.witness.host_n = res.expansion.n;
    for (auto& p : paths) res.witness.paths.emplace_back(p.begin(), p.end());
    std::string why;
    if (!validate_covering(res.expansion, res.witness, &why)) {
        throw Error("internal: threaded witness invalid: " + why);
    }
    return res;
}

}  // namespace pcov
