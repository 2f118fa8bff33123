#include "pcov/island.hpp"

#include <json.hpp>

#include <algorithm>
#include <queue>
#include <set>
#include <utility>

namespace pcov {

namespace {

// Star positions, each vine listed center-outward: center A, innermost vine
// vertex B (carrying the vine vertex count), vine interiors A, vine ends O.
void mark_star_positions(int center, const std::vector<std::vector<int>>& vines,
                         std::vector<Mark>& mark, std::vector<int>& home) {
    mark[center] = Mark::A;
    for (const auto& vn : vines) {
        const int k = static_cast<int>(vn.size());
        for (int i = 0; i < k; ++i) {
            if (i == k - 1) {
                mark[vn[i]] = Mark::O;
            } else if (i == 0) {
                mark[vn[i]] = Mark::B;
                home[vn[i]] = k;
            } else {
                mark[vn[i]] = Mark::A;
            }
        }
    }
}

void mark_path_positions(const std::vector<int>& seq, std::vector<Mark>& mark) {
    for (int x : seq) mark[x] = Mark::A;
    mark[seq.front()] = Mark::O;
    mark[seq.back()] = Mark::O;
}

void require(bool ok, const char* msg) {
    if (!ok) throw ConditionError(msg);
}

// Vine count of a freshly built star (metadata is cleared on composites).
int star_vine_count(const LabeledTree& s) {
    require(s.star_center == 0 && s.star_vine_len >= 1,
            "attached star must come from make_labeled_generalized_star");
    return (s.tree.n - 1) / s.star_vine_len;
}

bool is_path_graph(const Graph& g) {
    if (!is_tree(g)) return false;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

// New edge from `host` in t to vertex `anchor_local` of `add`; add's ids are
// shifted past t's.
LabeledTree compose(const LabeledTree& t, int host, const LabeledTree& add, int anchor_local) {
    const int base = t.tree.n;
    std::vector<std::pair<int, int>> es = t.tree.edges();
    for (auto [a, b] : add.tree.edges()) es.emplace_back(a + base, b + base);
    es.emplace_back(host, base + anchor_local);

    LabeledTree out;
    out.tree = Graph::from_edges(base + add.tree.n, es);
    out.mark = t.mark;
    out.mark.insert(out.mark.end(), add.mark.begin(), add.mark.end());
    out.b_vine_count = t.b_vine_count;
    out.b_vine_count.insert(out.b_vine_count.end(), add.b_vine_count.begin(),
                            add.b_vine_count.end());
    return out;
}

}  // namespace

LabeledTree make_labeled_generalized_star(int vine_count, int vine_vertices) {
    require(vine_count >= 2, "a generalized star needs at least two vines");
    require(vine_vertices >= 1, "a vine needs at least one vertex");

    const int n = 1 + vine_count * vine_vertices;
    std::vector<std::pair<int, int>> es;
    std::vector<std::vector<int>> vines;
    for (int j = 0; j < vine_count; ++j) {
        std::vector<int> vn(vine_vertices);
        for (int i = 0; i < vine_vertices; ++i) vn[i] = 1 + j * vine_vertices + i;
        es.emplace_back(0, vn[0]);
        for (int i = 1; i < vine_vertices; ++i) es.emplace_back(vn[i - 1], vn[i]);
        vines.push_back(std::move(vn));
    }

    LabeledTree t;
    t.tree = Graph::from_edges(n, es);
    t.mark.assign(n, Mark::O);
    t.b_vine_count.assign(n, 0);
    mark_star_positions(0, vines, t.mark, t.b_vine_count);
    t.star_center = 0;
    t.star_vine_len = vine_vertices;
    return t;
}

LabeledTree make_labeled_path(int n) {
    require(n >= 3, "a labeled path needs at least three vertices");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);

    LabeledTree t;
    t.tree = Graph::from_edges(n, es);
    t.mark.assign(n, Mark::A);
    t.mark[0] = Mark::O;
    t.mark[n - 1] = Mark::O;
    t.b_vine_count.assign(n, 0);
    return t;
}

LabeledTree apply_type1(const LabeledTree& t, int u, const LabeledTree& star) {
    require(u >= 0 && u < t.tree.n, "type1 host out of range");
    require(t.mark[u] == Mark::A, "type1 host must be marked A");
    require(star_vine_count(star) >= 3, "type1 star needs at least three vines");
    return compose(t, u, star, 0);
}

LabeledTree apply_type2(const LabeledTree& t, int u, const LabeledTree& p, int anchor) {
    require(u >= 0 && u < t.tree.n, "type2 host out of range");
    require(t.mark[u] == Mark::A, "type2 host must be marked A");
    require(p.tree.n >= 3, "type2 path needs at least three vertices");
    require(is_path_graph(p.tree), "type2 attachment must be a path");
    require(anchor >= 0 && anchor < p.tree.n, "type2 anchor out of range");
    require(p.tree.degree(anchor) == 2, "type2 anchor must not be a path end");
    return compose(t, u, p, anchor);
}

LabeledTree apply_type3(const LabeledTree& t, int u, const LabeledTree& star) {
    require(u >= 0 && u < t.tree.n, "type3 host out of range");
    require(t.mark[u] == Mark::B, "type3 host must be marked B");
    require(star_vine_count(star) >= 2, "type3 star needs at least two vines");
    require(star.star_vine_len == t.b_vine_count[u],
            "type3 star vine vertex count must match the host's");
    return compose(t, u, star, 0);
}

LabeledTree replay_script(const ConstructionScript& script) {
    require(!script.empty(), "empty script");
    require(script[0].op == "base", "script must start with a base op");

    // Pass 1: every op introduces fresh ids; together they must cover 0..n-1.
    std::set<int> all;
    auto add_ids = [&](const std::vector<int>& ids) {
        for (int x : ids) {
            require(x >= 0, "script ids must be nonnegative");
            require(all.insert(x).second, "script reintroduces a vertex id");
        }
    };
    for (std::size_t i = 0; i < script.size(); ++i) {
        const ScriptOp& op = script[i];
        if (op.op == "base") {
            require(i == 0, "base op must come first and only once");
            require(op.base_kind == "star" || op.base_kind == "path",
                    "base kind must be star or path");
            if (op.base_kind == "star") {
                add_ids({op.anchor});
                for (const auto& vn : op.vines) add_ids(vn);
            } else {
                add_ids(op.path);
            }
        } else if (op.op == "type1" || op.op == "type3") {
            add_ids({op.anchor});
            for (const auto& vn : op.vines) add_ids(vn);
        } else if (op.op == "type2") {
            add_ids(op.path);
        } else {
            throw ConditionError("unknown script op: " + op.op);
        }
    }
    const int n = static_cast<int>(all.size());
    require(n > 0 && *all.rbegin() == n - 1, "script ids must form a dense 0..n-1 range");

    // Pass 2: build, validating host marks and vine-count matches as we go.
    std::vector<Mark> mark(n, Mark::O);
    std::vector<int> home(n, 0);
    std::vector<char> built(n, 0);
    std::vector<std::pair<int, int>> es;

    auto build_star = [&](int center, const std::vector<std::vector<int>>& vines,
                          int min_vines, int need_len) {
        require(static_cast<int>(vines.size()) >= min_vines, "star op has too few vines");
        const std::size_t k = vines[0].size();
        require(k >= 1, "star op has an empty vine");
        for (const auto& vn : vines)
            require(vn.size() == k, "star op vines must have equal vertex counts");
        if (need_len > 0)
            require(static_cast<int>(k) == need_len,
                    "attached star vine vertex count must match the host's");
        built[center] = 1;
        for (const auto& vn : vines) {
            es.emplace_back(center, vn[0]);
            for (std::size_t i = 1; i < vn.size(); ++i) es.emplace_back(vn[i - 1], vn[i]);
            for (int x : vn) built[x] = 1;
        }
        mark_star_positions(center, vines, mark, home);
    };
    auto build_path = [&](const std::vector<int>& path) {
        require(path.size() >= 3, "path op needs at least three vertices");
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            es.emplace_back(path[i], path[i + 1]);
        for (int x : path) built[x] = 1;
        mark_path_positions(path, mark);
    };
    auto host_ok = [&](int h, Mark want, const char* msg) {
        require(h >= 0 && h < n && built[h] && mark[h] == want, msg);
    };

    for (const ScriptOp& op : script) {
        if (op.op == "base") {
            if (op.base_kind == "star") {
                build_star(op.anchor, op.vines, 3, 0);
            } else {
                build_path(op.path);
            }
        } else if (op.op == "type1") {
            host_ok(op.host, Mark::A, "type1 host must be a built vertex marked A");
            build_star(op.anchor, op.vines, 3, 0);
            es.emplace_back(op.host, op.anchor);
        } else if (op.op == "type2") {
            host_ok(op.host, Mark::A, "type2 host must be a built vertex marked A");
            auto it = std::find(op.path.begin(), op.path.end(), op.anchor);
            require(it != op.path.begin() && it != op.path.end() &&
                        it != op.path.end() - 1,
                    "type2 anchor must be an interior vertex of its path");
            build_path(op.path);
            es.emplace_back(op.host, op.anchor);
        } else {  // type3
            host_ok(op.host, Mark::B, "type3 host must be a built vertex marked B");
            build_star(op.anchor, op.vines, 2, home[op.host]);
            es.emplace_back(op.host, op.anchor);
        }
    }

    LabeledTree out;
    out.tree = Graph::from_edges(n, es);
    require(is_tree(out.tree), "script does not assemble a tree");
    out.mark = std::move(mark);
    out.b_vine_count = std::move(home);
    return out;
}

std::string script_to_json(const ConstructionScript& script) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const ScriptOp& op : script) {
        nlohmann::ordered_json o;
        o["op"] = op.op;
        if (!op.base_kind.empty()) o["kind"] = op.base_kind;
        if (op.host >= 0) o["host"] = op.host;
        if (op.anchor >= 0) o["anchor"] = op.anchor;
        if (!op.vines.empty()) o["vines"] = op.vines;
        if (!op.path.empty()) o["path"] = op.path;
        arr.push_back(std::move(o));
    }
    return arr.dump(2);
}

ConstructionScript script_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad script json: ") + e.what());
    }
    if (!j.is_array()) throw ParseError("script json must be an array of ops");

    ConstructionScript sc;
    for (const auto& o : j) {
        if (!o.is_object() || !o.contains("op") || !o["op"].is_string())
            throw ParseError("each script op needs an \"op\" string");
        ScriptOp op;
        op.op = o["op"].get<std::string>();
        try {
            if (o.contains("kind")) op.base_kind = o["kind"].get<std::string>();
            if (o.contains("host")) op.host = o["host"].get<int>();
            if (o.contains("anchor")) op.anchor = o["anchor"].get<int>();
            if (o.contains("vines")) op.vines = o["vines"].get<std::vector<std::vector<int>>>();
            if (o.contains("path")) op.path = o["path"].get<std::vector<int>>();
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("bad script op field: ") + e.what());
        }
        sc.push_back(std::move(op));
    }
    return sc;
}

GeneratedTree generate_F(std::uint64_t seed, int max_n) {
    require(max_n >= 3, "generate_F needs room for at least three vertices");
    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    auto hosts_with = [](const LabeledTree& t, Mark m) {
        std::vector<int> v;
        for (int i = 0; i < t.tree.n; ++i)
            if (t.mark[i] == m) v.push_back(i);
        return v;
    };

    LabeledTree t;
    ConstructionScript sc;
    ScriptOp base;
    base.op = "base";
    if (max_n >= 4 && pick(0, 1) == 1) {
        const int kmax = std::min(3, (max_n - 1) / 3);
        const int k = pick(1, kmax);
        const int cmax = std::min(5, (max_n - 1) / k);
        const int c = pick(3, cmax);
        t = make_labeled_generalized_star(c, k);
        base.base_kind = "star";
        base.anchor = 0;
        for (int j = 0; j < c; ++j) {
            std::vector<int> vn(k);
            for (int i = 0; i < k; ++i) vn[i] = 1 + j * k + i;
            base.vines.push_back(std::move(vn));
        }
    } else {
        const int len = pick(3, std::min(max_n, 8));
        t = make_labeled_path(len);
        base.base_kind = "path";
        base.path.resize(len);
        for (int i = 0; i < len; ++i) base.path[i] = i;
    }
    sc.push_back(std::move(base));

    for (int tries = 0; tries < 64; ++tries) {
        const int room = max_n - t.tree.n;
        if (room < 3) break;
        const int which = pick(0, 2);
        const int shift = t.tree.n;
        ScriptOp op;

        if (which == 0 && room >= 4) {
            const auto hosts = hosts_with(t, Mark::A);
            if (hosts.empty()) continue;
            const int u = hosts[pick(0, static_cast<int>(hosts.size()) - 1)];
            const int kmax = std::min(2, (room - 1) / 3);
            const int k = pick(1, kmax);
            const int cmax = std::min(4, (room - 1) / k);
            const int c = pick(3, cmax);
            t = apply_type1(t, u, make_labeled_generalized_star(c, k));
            op.op = "type1";
            op.host = u;
            op.anchor = shift;
            for (int j = 0; j < c; ++j) {
                std::vector<int> vn(k);
                for (int i = 0; i < k; ++i) vn[i] = shift + 1 + j * k + i;
                op.vines.push_back(std::move(vn));
            }
        } else if (which == 1) {
            const auto hosts = hosts_with(t, Mark::A);
            if (hosts.empty()) continue;
            const int u = hosts[pick(0, static_cast<int>(hosts.size()) - 1)];
            const int len = pick(3, std::min(room, 6));
            const int anchor = pick(1, len - 2);
            t = apply_type2(t, u, make_labeled_path(len), anchor);
            op.op = "type2";
            op.host = u;
            op.anchor = shift + anchor;
            op.path.resize(len);
            for (int i = 0; i < len; ++i) op.path[i] = shift + i;
        } else if (which == 2) {
            auto hosts = hosts_with(t, Mark::B);
            std::erase_if(hosts, [&](int u) { return (room - 1) / t.b_vine_count[u] < 2; });
            if (hosts.empty()) continue;
            const int u = hosts[pick(0, static_cast<int>(hosts.size()) - 1)];
            const int k = t.b_vine_count[u];
            const int cmax = std::min(4, (room - 1) / k);
            const int c = pick(2, cmax);
            t = apply_type3(t, u, make_labeled_generalized_star(c, k));
            op.op = "type3";
            op.host = u;
            op.anchor = shift;
            for (int j = 0; j < c; ++j) {
                std::vector<int> vn(k);
                for (int i = 0; i < k; ++i) vn[i] = shift + 1 + j * k + i;
                op.vines.push_back(std::move(vn));
            }
        } else {
            continue;
        }
        sc.push_back(std::move(op));
    }

    if (!(replay_script(sc).tree == t.tree))
        throw Error("internal: generated script does not replay to the generated tree");
    return {std::move(t), std::move(sc)};
}

DuisVerdict duis(const Graph& t) {
    if (t.n <= 0) throw ConditionError("uniqueness check needs a nonempty graph");
    if (!is_tree(t)) throw ConditionError("uniqueness check needs a tree");
    const int n = t.n;

    DuisVerdict out;
    std::vector<char> mk(n, 'O');
    std::vector<int> f(n, 0);
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = t.degree(v);

    // Root leaf; everything runs off one BFS from it.
    int r = 0;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) {
            r = v;
            break;
        }
    std::vector<int> dist(n, -1), parent(n, -1);
    {
        std::queue<int> q;
        dist[r] = 0;
        q.push(r);
        while (!q.empty()) {
            const int x = q.front();
            q.pop();
            ++out.ops;
            for (int y : t.adj[x])
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    q.push(y);
                }
        }
    }
    // Vertices by distance descending (ties by index): the next reduction
    // vertex is always the farthest remaining heavy one, and heaviness only
    // ever decays, so one forward pointer suffices.
    int maxd = 0;
    for (int v = 0; v < n; ++v) maxd = std::max(maxd, dist[v]);
    std::vector<std::vector<int>> bucket(maxd + 1);
    for (int v = 0; v < n; ++v) bucket[dist[v]].push_back(v);
    std::vector<int> fo;
    fo.reserve(n);
    for (int d = maxd; d >= 0; --d)
        for (int x : bucket[d]) fo.push_back(x);

    std::vector<char> alive(n, 1);
    int alive_count = n;
    int heavy_count = 0;
    for (int v = 0; v < n; ++v)
        if (deg[v] > 2) ++heavy_count;
    int p = 0;

    auto reject = [&](int x) {
        out.unique = false;
        out.final_reject_vertex = x;
        return out;
    };

    while (true) {
        if (heavy_count == 0) {
            // Remaining tree is a path; walk it from the root leaf.
            std::vector<int> seq;
            seq.reserve(alive_count);
            int prev = -1, cur = r;
            while (cur != -1) {
                ++out.ops;
                seq.push_back(cur);
                int nxt = -1;
                for (int y : t.adj[cur])
                    if (alive[y] && y != prev) {
                        nxt = y;
                        break;
                    }
                prev = cur;
                cur = nxt;
            }
            if (static_cast<int>(seq.size()) != alive_count)
                throw Error("internal: remainder is not a path");
            const int k = alive_count;
            for (int x : {seq.front(), seq.back()})
                if (mk[x] == 'A' || (f[x] > 0 && f[x] != k)) return reject(x);
            out.unique = true;
            out.final_path = std::move(seq);
            return out;
        }

        while (p < n && (!alive[fo[p]] || deg[fo[p]] <= 2)) {
            ++p;
            ++out.ops;
        }
        if (p >= n) throw Error("internal: heavy bookkeeping out of sync");
        const int v = fo[p];
        const int u = parent[v];

        // The piece behind edge u-v is v plus the light chains hanging off it.
        std::vector<std::vector<int>> chains;
        for (int w : t.adj[v]) {
            if (!alive[w] || w == u) continue;
            std::vector<int> ch{w};
            int prev = v, cur = w;
            while (true) {
                ++out.ops;
                int nxt = -1;
                for (int y : t.adj[cur])
                    if (alive[y] && y != prev) {
                        nxt = y;
                        break;
                    }
                if (nxt == -1) break;
                ch.push_back(nxt);
                prev = cur;
                cur = nxt;
            }
            chains.push_back(std::move(ch));
        }

        DuisRecord rec;
        rec.v = v;
        rec.u = u;
        const int c = static_cast<int>(chains.size());

        if (c >= 3) {
            const int k = static_cast<int>(chains[0].size());
            for (const auto& ch : chains)
                if (static_cast<int>(ch.size()) != k) return reject(v);
            for (const auto& ch : chains) {
                const int x = ch.front();
                ++out.ops;
                if (mk[x] == 'A' || (f[x] > 0 && f[x] != k)) return reject(x);
            }
            for (const auto& ch : chains) {
                const int x = ch.back();
                ++out.ops;
                if (mk[x] == 'A' || f[x] > 0) return reject(x);
            }
            rec.star = true;
            rec.k = k;
            if (f[u] > 0 && f[u] != k) {
                mk[u] = 'A';
                f[u] = 0;
                rec.action = 1;
            } else if (f[u] == 0 && mk[u] == 'O') {
                f[u] = k;
                rec.action = 2;
                rec.constraint = k;
            }
        } else {
            const int k = 1 + static_cast<int>(chains[0].size() + chains[1].size());
            rec.k = k;
            for (const auto& ch : chains) {
                const int x = ch.back();
                ++out.ops;
                if (mk[x] == 'A' || (f[x] > 0 && f[x] != k)) return reject(x);
            }
            if (chains[0].size() != chains[1].size()) {
                mk[u] = 'A';
                f[u] = 0;
                rec.action = 1;
            } else {
                rec.middle = true;
                const int half = (k - 1) / 2;
                bool pin = false;
                for (int x : {u, chains[0].front(), chains[1].front()}) {
                    ++out.ops;
                    if (mk[x] == 'A' || (f[x] > 0 && f[x] != half)) pin = true;
                }
                if (f[chains[0].back()] == k || f[chains[1].back()] == k) pin = true;
                if (pin) {
                    mk[u] = 'A';
                    f[u] = 0;
                    rec.action = 1;
                } else {
                    f[u] = half;
                    rec.action = 2;
                    rec.constraint = half;
                }
            }
        }

        alive[v] = 0;
        --alive_count;
        --heavy_count;
        for (const auto& ch : chains)
            for (int x : ch) {
                alive[x] = 0;
                --alive_count;
            }
        if (deg[u] == 3) --heavy_count;
        --deg[u];
        rec.chains = std::move(chains);
        out.trace.push_back(std::move(rec));
    }
}

SequenceSet sequence_set(const Graph& t, const OracleBudget& budget) {
    return oracle_path_cover(t, budget).sequences;
}

namespace {

// One reduction unit: either a removed star/path piece or the surviving path.
struct CUnit {
    bool star = false;
    int center = -1;               // star units: the cut vertex
    int k = 0;                     // star units: vine vertex count
    std::vector<std::vector<int>> chains;
    std::vector<int> seq;          // path-type units, in path order
    std::vector<int> members;
};

struct UEdge {
    int to;     // neighbouring unit
    int my;     // edge endpoint inside this unit
    int other;  // edge endpoint inside the neighbour
};

// Tries to read the unit tree rooted at `root` as one base construction plus
// attachment ops. Returns the script, or nullopt when some attachment has no
// valid reading.
std::optional<ConstructionScript> assemble_from_root(
    const Graph& t, const std::vector<CUnit>& units,
    const std::vector<std::vector<UEdge>>& adjU, int root) {
    const int n = t.n;
    const int nu = static_cast<int>(units.size());
    std::vector<Mark> pm(n, Mark::O);
    std::vector<int> ph(n, 0);
    std::vector<char> vis(nu, 0);
    std::queue<int> bfs;
    ConstructionScript sc;

    auto seq_pos = [](const std::vector<int>& seq, int x) {
        for (std::size_t i = 0; i < seq.size(); ++i)
            if (seq[i] == x) return static_cast<int>(i);
        return -1;
    };
    // Two halves of an odd path around its middle, each middle-outward.
    auto halves = [](const std::vector<int>& seq, int mid) {
        std::vector<std::vector<int>> vs(2);
        for (int i = mid - 1; i >= 0; --i) vs[0].push_back(seq[i]);
        for (int i = mid + 1; i < static_cast<int>(seq.size()); ++i) vs[1].push_back(seq[i]);
        return vs;
    };
    // Star reading of a child unit joined through vertex `a`: a plain star
    // unit anchored at its center, or an odd path anchored dead-center.
    auto star_view = [&](const CUnit& c, int a, int& k, int& center,
                         std::vector<std::vector<int>>& vines) {
        if (c.star) {
            if (a != c.center) return false;
            k = c.k;
            center = c.center;
            vines = c.chains;
            return true;
        }
        const int len = static_cast<int>(c.seq.size());
        const int pos = seq_pos(c.seq, a);
        if (len < 3 || len % 2 == 0 || pos != len / 2) return false;
        k = (len - 1) / 2;
        center = a;
        vines = halves(c.seq, pos);
        return true;
    };

    // Root unit, possibly merged with one child star hanging off a path end.
    const CUnit& R = units[root];
    if (R.star) {
        ScriptOp op;
        op.op = "base";
        op.base_kind = "star";
        op.anchor = R.center;
        op.vines = R.chains;
        mark_star_positions(R.center, R.chains, pm, ph);
        sc.push_back(std::move(op));
        vis[root] = 1;
        bfs.push(root);
    } else {
        const int e1 = R.seq.front(), e2 = R.seq.back();
        std::vector<const UEdge*> at_end;
        int w = -1;
        for (const UEdge& e : adjU[root]) {
            if (e.my == e1 || e.my == e2) {
                if (w == -1) w = e.my;
                if (e.my != w) return std::nullopt;  // both ends host: no reading
                at_end.push_back(&e);
            }
        }
        if (at_end.empty()) {
            if (R.seq.size() < 3) return std::nullopt;
            ScriptOp op;
            op.op = "base";
            op.base_kind = "path";
            op.path = R.seq;
            mark_path_positions(R.seq, pm);
            sc.push_back(std::move(op));
        } else {
            // Every end-attached child must read as a star whose vine vertex
            // count equals this path's length; the first becomes the merge
            // target, the rest ride along as later attachments at w.
            const int s = static_cast<int>(R.seq.size());
            for (const UEdge* e : at_end) {
                int k, center;
                std::vector<std::vector<int>> vines;
                if (!star_view(units[e->to], e->other, k, center, vines) || k != s)
                    return std::nullopt;
            }
            const UEdge* tgt = at_end.front();
            int k = 0, center = -1;
            std::vector<std::vector<int>> vines;
            if (!star_view(units[tgt->to], tgt->other, k, center, vines) || k != s)
                return std::nullopt;
            std::vector<int> vine_r = R.seq;
            if (vine_r.front() != w) std::reverse(vine_r.begin(), vine_r.end());
            vines.push_back(std::move(vine_r));

            ScriptOp op;
            op.op = "base";
            op.base_kind = "star";
            op.anchor = center;
            op.vines = vines;
            mark_star_positions(center, vines, pm, ph);
            sc.push_back(std::move(op));
            vis[tgt->to] = 1;
            bfs.push(tgt->to);
        }
        vis[root] = 1;
        bfs.push(root);
    }

    while (!bfs.empty()) {
        const int a = bfs.front();
        bfs.pop();
        for (const UEdge& e : adjU[a]) {
            if (vis[e.to]) continue;
            const CUnit& C = units[e.to];
            const int h = e.my;

            ScriptOp op;
            if (pm[h] == Mark::A) {
                if (C.star) {
                    if (e.other != C.center) return std::nullopt;
                    op.op = "type1";
                    op.host = h;
                    op.anchor = C.center;
                    op.vines = C.chains;
                    mark_star_positions(C.center, C.chains, pm, ph);
                } else {
                    const int pos = seq_pos(C.seq, e.other);
                    if (C.seq.size() < 3 || pos <= 0 ||
                        pos >= static_cast<int>(C.seq.size()) - 1)
                        return std::nullopt;
                    op.op = "type2";
                    op.host = h;
                    op.anchor = e.other;
                    op.path = C.seq;
                    mark_path_positions(C.seq, pm);
                }
            } else if (pm[h] == Mark::B) {
                int k, center;
                std::vector<std::vector<int>> vines;
                if (!star_view(C, e.other, k, center, vines) || k != ph[h])
                    return std::nullopt;
                op.op = "type3";
                op.host = h;
                op.anchor = center;
                op.vines = vines;
                mark_star_positions(center, vines, pm, ph);
            } else {
                return std::nullopt;
            }
            sc.push_back(std::move(op));
            vis[e.to] = 1;
            bfs.push(e.to);
        }
    }
    for (int i = 0; i < nu; ++i)
        if (!vis[i]) return std::nullopt;

    // A script is only returned if it provably rebuilds the input.
    try {
        const LabeledTree rt = replay_script(sc);
        if (rt.tree.n != t.n) return std::nullopt;
        const auto ea = rt.tree.edges(), eb = t.edges();
        if (std::set<std::pair<int, int>>(ea.begin(), ea.end()) !=
            std::set<std::pair<int, int>>(eb.begin(), eb.end()))
            return std::nullopt;
    } catch (const Error&) {
        return std::nullopt;
    }
    return sc;
}

}  // namespace

std::optional<ConstructionScript> certify_F_membership(const Graph& t) {
    if (t.n < 3) return std::nullopt;
    const DuisVerdict d = duis(t);
    if (!d.unique) return std::nullopt;

    // Units: the surviving path plus one unit per removed piece.
    std::vector<CUnit> units(1 + d.trace.size());
    units[0].seq = d.final_path;
    for (int x : d.final_path) units[0].members.push_back(x);
    for (std::size_t i = 0; i < d.trace.size(); ++i) {
        const DuisRecord& rec = d.trace[i];
        CUnit& un = units[i + 1];
        un.members.push_back(rec.v);
        for (const auto& ch : rec.chains)
            for (int x : ch) un.members.push_back(x);
        if (rec.star) {
            un.star = true;
            un.center = rec.v;
            un.k = rec.k;
            un.chains = rec.chains;
        } else {
            un.seq.assign(rec.chains[0].rbegin(), rec.chains[0].rend());
            un.seq.push_back(rec.v);
            un.seq.insert(un.seq.end(), rec.chains[1].begin(), rec.chains[1].end());
        }
    }

    std::vector<int> uidx(t.n, -1);
    for (std::size_t i = 0; i < units.size(); ++i)
        for (int x : units[i].members) uidx[x] = static_cast<int>(i);

    std::vector<std::vector<UEdge>> adjU(units.size());
    for (std::size_t i = 0; i < d.trace.size(); ++i) {
        const int pu = d.trace[i].u, pv = d.trace[i].v;
        const int a = uidx[pu], b = static_cast<int>(i) + 1;
        adjU[a].push_back({b, pu, pv});
        adjU[b].push_back({a, pv, pu});
    }

    for (std::size_t root = 0; root < units.size(); ++root)
        if (auto sc = assemble_from_root(t, units, adjU, static_cast<int>(root)))
            return sc;
    return std::nullopt;
}

}  // namespace pcov
