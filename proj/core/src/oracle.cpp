#include "pcov/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace pcov {

namespace {

struct RollbackDsu {
    std::vector<int> parent, sz;
    std::vector<std::pair<int, int>> log;  // (winner, absorbed root)

    explicit RollbackDsu(int n) : parent(n), sz(n, 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) const {
        while (parent[x] != x) x = parent[x];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (sz[a] < sz[b]) std::swap(a, b);
        parent[b] = a;
        sz[a] += sz[b];
        log.emplace_back(a, b);
        return true;
    }
    void rollback() {
        auto [a, b] = log.back();
        log.pop_back();
        parent[b] = b;
        sz[a] -= sz[b];
    }
};

// Branch and bound over the edge list: an edge can be kept when both
// endpoints still have forest degree < 2 and it joins two components.
struct ForestSearch {
    const std::vector<std::pair<int, int>>& es;
    int m;
    std::vector<int> deg;
    RollbackDsu dsu;
    int best = 0;
    std::vector<char> chosen;
    std::function<void()> emit;
    bool done = false;

    ForestSearch(int n, const std::vector<std::pair<int, int>>& edges)
        : es(edges), m(static_cast<int>(edges.size())), deg(n, 0), dsu(n) {}

    // Phase 1: maximum kept-edge count.
    void maximize(int i, int cur) {
        if (cur + (m - i) <= best) return;
        if (i == m) {
            best = cur;
            return;
        }
        auto [u, v] = es[i];
        if (deg[u] < 2 && deg[v] < 2 && dsu.unite(u, v)) {
            ++deg[u];
            ++deg[v];
            maximize(i + 1, cur + 1);
            --deg[u];
            --deg[v];
            dsu.rollback();
        }
        maximize(i + 1, cur);
    }

    // Phase 2: emit every subset that reaches the known optimum.
    void collect(int i, int cur, int target) {
        if (done || cur + (m - i) < target) return;
        if (i == m) {
            emit();
            return;
        }
        auto [u, v] = es[i];
        if (deg[u] < 2 && deg[v] < 2 && dsu.unite(u, v)) {
            ++deg[u];
            ++deg[v];
            chosen[i] = 1;
            collect(i + 1, cur + 1, target);
            chosen[i] = 0;
            --deg[u];
            --deg[v];
            dsu.rollback();
        }
        collect(i + 1, cur, target);
    }
};

PathCovering covering_from_forest(int n, const std::vector<std::pair<int, int>>& es,
                                  const std::vector<char>& chosen) {
    std::vector<std::vector<int>> fadj(n);
    for (size_t i = 0; i < es.size(); ++i) {
        if (!chosen[i]) continue;
        fadj[es[i].first].push_back(es[i].second);
        fadj[es[i].second].push_back(es[i].first);
    }
    PathCovering c;
    c.host_n = n;
    std::vector<char> seen(n, 0);
    for (int v = 0; v < n; ++v) {
        if (seen[v] || fadj[v].size() > 1) continue;  // start only at path ends
        std::vector<int> path = {v};
        seen[v] = 1;
        int prev = -1, cur = v;
        while (true) {
            int nxt = -1;
            for (int w : fadj[cur]) {
                if (w != prev) nxt = w;
            }
            if (nxt == -1) break;
            path.push_back(nxt);
            seen[nxt] = 1;
            prev = cur;
            cur = nxt;
        }
        c.paths.push_back(std::move(path));
    }
    return c;
}

}  // namespace

OracleCoverResult oracle_path_cover(const Graph& g, const OracleBudget& budget) {
    if (g.n > budget.max_n_cover) {
        throw ResourceError("oracle_path_cover: n=" + std::to_string(g.n) +
                            " exceeds budget max_n_cover=" +
                            std::to_string(budget.max_n_cover));
    }
    OracleCoverResult res;
    if (g.n == 0) {
        res.p = 0;
        res.sequences.insert({});
        res.coverings.push_back({{}, 0});
        return res;
    }
    auto es = g.edges();
    ForestSearch s1(g.n, es);
    s1.maximize(0, 0);
    res.p = g.n - s1.best;

    ForestSearch s2(g.n, es);
    s2.chosen.assign(es.size(), 0);
    s2.emit = [&]() {
        if (static_cast<long long>(res.coverings.size()) >= budget.max_coverings) {
            throw ResourceError("oracle_path_cover: more than " +
                                std::to_string(budget.max_coverings) +
                                " optimal coverings");
        }
        PathCovering c = covering_from_forest(g.n, es, s2.chosen);
        res.sequences.insert(path_sequence(c));
        res.coverings.push_back(std::move(c));
    };
    s2.collect(0, 0, s1.best);
    return res;
}

PathCovering oracle_one_min_cover(const Graph& g, const OracleBudget& budget) {
    if (g.n > budget.max_n_cover) {
        throw ResourceError("oracle_one_min_cover: n=" + std::to_string(g.n) +
                            " exceeds budget max_n_cover=" +
                            std::to_string(budget.max_n_cover));
    }
    if (g.n == 0) return {{}, 0};
    auto es = g.edges();
    ForestSearch s1(g.n, es);
    s1.maximize(0, 0);
    ForestSearch s2(g.n, es);
    s2.chosen.assign(es.size(), 0);
    PathCovering out;
    s2.emit = [&]() {
        out = covering_from_forest(g.n, es, s2.chosen);
        s2.done = true;
    };
    s2.collect(0, 0, s1.best);
    if (!s2.done) throw Error("internal: optimum not reproduced in second pass");
    return out;
}

int oracle_max_linear_forest(const Graph& g, bool reverse_edge_order,
                             const OracleBudget& budget) {
    if (g.n > budget.max_n_cover) {
        throw ResourceError("oracle_max_linear_forest: n=" + std::to_string(g.n) +
                            " exceeds budget max_n_cover=" +
                            std::to_string(budget.max_n_cover));
    }
    auto es = g.edges();
    if (reverse_edge_order) std::reverse(es.begin(), es.end());
    ForestSearch s(g.n, es);
    s.maximize(0, 0);
    return s.best;
}

namespace {

// Vertices in BFS order, restarted from an unvisited maximum-degree vertex
// per component; constrains the backtracking early.
std::vector<int> labeling_order(const Graph& g) {
    int n = g.n;
    std::vector<int> order;
    order.reserve(n);
    std::vector<char> vis(n, 0);
    while (static_cast<int>(order.size()) < n) {
        int s = -1;
        for (int v = 0; v < n; ++v) {
            if (!vis[v] && (s == -1 || g.degree(v) > g.degree(s))) s = v;
        }
        std::queue<int> q;
        q.push(s);
        vis[s] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            order.push_back(v);
            for (int w : g.adj[v]) {
                if (!vis[w]) {
                    vis[w] = 1;
                    q.push(w);
                }
            }
        }
    }
    return order;
}

// near1 = adjacent pairs, near2 = distance exactly two.
void distance_pairs(const Graph& g, std::vector<std::vector<int>>& near1,
                    std::vector<std::vector<int>>& near2) {
    int n = g.n;
    near1.assign(n, {});
    near2.assign(n, {});
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) {
                near1[u].push_back(v);
                near1[v].push_back(u);
                continue;
            }
            bool common = false;
            for (int w : g.adj[u]) {
                if (g.has_edge(w, v)) {
                    common = true;
                    break;
                }
            }
            if (common) {
                near2[u].push_back(v);
                near2[v].push_back(u);
            }
        }
    }
}

bool label_fits(const std::vector<int>& label, const std::vector<std::vector<int>>& near1,
                const std::vector<std::vector<int>>& near2, int v, int l) {
    for (int w : near1[v]) {
        if (label[w] >= 0) {
            int d = label[w] - l;
            if (d < 2 && d > -2) return false;
        }
    }
    for (int w : near2[v]) {
        if (label[w] == l) return false;
    }
    return true;
}

}  // namespace

OracleLambdaResult oracle_lambda(const Graph& g, const OracleBudget& budget) {
    if (g.n > budget.max_n_labeling) {
        throw ResourceError("oracle_lambda: n=" + std::to_string(g.n) +
                            " exceeds budget max_n_labeling=" +
                            std::to_string(budget.max_n_labeling));
    }
    OracleLambdaResult res;
    int n = g.n;
    if (n == 0) return res;
    std::vector<std::vector<int>> near1, near2;
    distance_pairs(g, near1, near2);
    std::vector<int> order = labeling_order(g);

    int lb = 0;
    if (g.edge_count() > 0) {
        int dmax = 0;
        for (int v = 0; v < n; ++v) dmax = std::max(dmax, g.degree(v));
        lb = dmax + 1;
    }

    std::vector<int> label(n, -1);
    std::function<bool(int, int)> place = [&](int pos, int k) -> bool {
        if (pos == n) return true;
        int v = order[pos];
        // Reflecting every label to k-l preserves validity, so the first
        // vertex only needs the lower half.
        int hi = (pos == 0) ? k / 2 : k;
        for (int l = 0; l <= hi; ++l) {
            if (!label_fits(label, near1, near2, v, l)) continue;
            label[v] = l;
            if (place(pos + 1, k)) return true;
            label[v] = -1;
        }
        return false;
    };

    // The complete graph needs span 2n-2 and dominates every other graph on
    // n vertices, so the deepening always terminates by then.
    for (int k = lb; k <= std::max(0, 2 * n - 2); ++k) {
        std::fill(label.begin(), label.end(), -1);
        if (place(0, k)) {
            res.lambda = k;
            res.witness.labels = label;
            return res;
        }
    }
    throw Error("internal: no distance-two labeling within span 2n-2");
}

OracleRhoResult oracle_rho(const Graph& g, const OracleBudget& budget) {
    OracleLambdaResult lam = oracle_lambda(g, budget);
    OracleRhoResult res;
    res.lambda = lam.lambda;
    int n = g.n;
    if (n == 0) return res;
    int L = lam.lambda;
    std::vector<std::vector<int>> near1, near2;
    distance_pairs(g, near1, near2);
    std::vector<int> order = labeling_order(g);

    int best_holes = lam.witness.holes();
    std::vector<int> best = lam.witness.labels;
    // No labeling can use more than n distinct labels.
    int floor_holes = std::max(0, (L + 1) - n);

    std::vector<int> label(n, -1);
    std::vector<int> used(L + 1, 0);
    int distinct = 0;
    std::function<void(int)> place = [&](int pos) {
        if (best_holes <= floor_holes) return;
        // Every remaining vertex can contribute at most one new label.
        if ((L + 1) - (distinct + (n - pos)) >= best_holes) return;
        if (pos == n) {
            Labeling f{label};
            int h = f.holes();
            if (h < best_holes) {
                best_holes = h;
                best = label;
            }
            return;
        }
        int v = order[pos];
        int hi = (pos == 0) ? L / 2 : L;
        for (int l = 0; l <= hi; ++l) {
            if (!label_fits(label, near1, near2, v, l)) continue;
            label[v] = l;
            if (used[l]++ == 0) ++distinct;
            place(pos + 1);
            if (--used[l] == 0) --distinct;
            label[v] = -1;
        }
    };
    place(0);
    res.rho = best_holes;
    res.witness.labels = std::move(best);
    return res;
}

Graph prufer_decode(int n, const std::vector<int>& seq) {
    if (n < 2) throw ConditionError("prufer_decode requires n >= 2");
    if (static_cast<int>(seq.size()) != n - 2) {
        throw ConditionError("prufer_decode: expected sequence of length " +
                             std::to_string(n - 2) + ", got " + std::to_string(seq.size()));
    }
    for (int x : seq) {
        if (x < 0 || x >= n) {
            throw ConditionError("prufer_decode: entry " + std::to_string(x) +
                                 " out of range 0.." + std::to_string(n - 1));
        }
    }
    std::vector<int> deg(n, 1);
    for (int x : seq) ++deg[x];
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int x : seq) {
        edges.emplace_back(leaf, x);
        if (--deg[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return Graph::from_edges(n, edges);
}

std::vector<int> prufer_encode(const Graph& t) {
    if (!is_tree(t)) throw ShapeError("prufer_encode requires a tree");
    int n = t.n;
    if (n < 2) throw ConditionError("prufer_encode requires n >= 2");
    std::vector<int> deg(n);
    std::vector<char> gone(n, 0);
    std::set<int> leaves;
    for (int v = 0; v < n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] == 1) leaves.insert(v);
    }
    std::vector<int> seq;
    seq.reserve(n - 2);
    for (int step = 0; step < n - 2; ++step) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        gone[leaf] = 1;
        int nb = -1;
        for (int w : t.adj[leaf]) {
            if (!gone[w]) nb = w;
        }
        seq.push_back(nb);
        if (--deg[nb] == 1) leaves.insert(nb);
    }
    return seq;
}

void enumerate_trees(int n, const std::function<bool(const Graph&)>& fn) {
    if (n < 1) throw ConditionError("enumerate_trees requires n >= 1");
    if (n == 1) {
        fn(Graph::from_edges(1, {}));
        return;
    }
    if (n == 2) {
        fn(Graph::from_edges(2, {{0, 1}}));
        return;
    }
    std::vector<int> seq(n - 2, 0);
    while (true) {
        if (!fn(prufer_decode(n, seq))) return;
        int i = 0;
        while (i < n - 2 && seq[i] == n - 1) {
            seq[i] = 0;
            ++i;
        }
        if (i == n - 2) return;
        ++seq[i];
    }
}

Graph random_tree(int n, std::mt19937_64& rng) {
    if (n < 1) throw ConditionError("random_tree requires n >= 1");
    if (n == 1) return Graph::from_edges(1, {});
    if (n == 2) return Graph::from_edges(2, {{0, 1}});
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> seq(n - 2);
    for (int& x : seq) x = pick(rng);
    return prufer_decode(n, seq);
}

std::string tree_canonical_string(const Graph& t) {
    if (!is_tree(t)) throw ShapeError("tree_canonical_string requires a tree");
    int n = t.n;
    if (n == 1) return "()";
    // Peel leaves in rounds; the last one or two vertices are the centers,
    // which any isomorphism must map onto each other.
    std::vector<int> deg(n);
    std::vector<char> removed(n, 0);
    std::vector<int> cur;
    for (int v = 0; v < n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] <= 1) cur.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> nxt;
        for (int v : cur) {
            removed[v] = 1;
            --remaining;
        }
        for (int v : cur) {
            for (int w : t.adj[v]) {
                if (!removed[w] && --deg[w] == 1) nxt.push_back(w);
            }
        }
        cur = std::move(nxt);
    }

    std::function<std::string(int, int)> go = [&](int v, int parent) -> std::string {
        std::vector<std::string> kids;
        for (int w : t.adj[v]) {
            if (w != parent) kids.push_back(go(w, v));
        }
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        for (const auto& k : kids) s += k;
        s += ")";
        return s;
    };
    std::string bestv;
    for (int c = 0; c < n; ++c) {
        if (removed[c]) continue;
        std::string s = go(c, -1);
        if (bestv.empty() || s < bestv) bestv = s;
    }
    return bestv;
}

}  // namespace pcov
