#include "pcov/labeling.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <json.hpp>

#include "pcov/oracle.hpp"

namespace pcov {

int Labeling::span() const {
    int s = 0;
    for (int l : labels) s = std::max(s, l);
    return s;
}

std::vector<Island> Labeling::islands() const {
    std::set<int> used(labels.begin(), labels.end());
    std::vector<Island> out;
    for (int l : used) {
        if (!out.empty() && out.back().second == l - 1) {
            out.back().second = l;
        } else {
            out.push_back({l, l});
        }
    }
    return out;
}

IslandSequence Labeling::island_sequence() const {
    IslandSequence seq;
    for (auto [a, b] : islands()) seq.push_back(b - a + 1);
    std::sort(seq.begin(), seq.end());
    return seq;
}

int Labeling::holes() const {
    std::set<int> used(labels.begin(), labels.end());
    int count = 0;
    for (int l = 1; l < span(); ++l) {
        if (!used.count(l)) ++count;
    }
    return count;
}

std::optional<L21Violation> validate_l21(const Graph& g, const Labeling& f) {
    if (static_cast<int>(f.labels.size()) != g.n) {
        throw ConditionError("labeling has " + std::to_string(f.labels.size()) +
                             " entries for " + std::to_string(g.n) + " vertices");
    }
    for (int l : f.labels) {
        if (l < 0) throw ConditionError("negative label");
    }
    for (int u = 0; u < g.n; ++u) {
        for (int v = u + 1; v < g.n; ++v) {
            int d = f.labels[u] - f.labels[v];
            if (d < 0) d = -d;
            if (g.has_edge(u, v)) {
                if (d < 2) return L21Violation{u, v, 1};
                continue;
            }
            if (d != 0) continue;
            for (int w : g.adj[u]) {
                if (g.has_edge(w, v)) return L21Violation{u, v, 2};
            }
        }
    }
    return std::nullopt;
}

Labeling labeling_from_cover(const Graph& g, const PathCovering& cover_of_complement) {
    Graph h = complement(g);
    std::string why;
    if (!validate_covering(h, cover_of_complement, &why)) {
        throw ConditionError("not a path covering of the complement: " + why);
    }
    // Canonical path order: each path read from its lower-indexed endpoint,
    // paths sorted by size then lexicographically.
    std::vector<std::vector<int>> paths = cover_of_complement.paths;
    for (auto& p : paths) {
        if (p.back() < p.front()) std::reverse(p.begin(), p.end());
    }
    std::sort(paths.begin(), paths.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    Labeling f;
    f.labels.assign(g.n, 0);
    int next = 0;
    for (const auto& p : paths) {
        for (int v : p) f.labels[v] = next++;
        ++next;  // hole between consecutive paths
    }
    // Consecutive labels only occur along complement edges, so the result is
    // always a valid distance-two labeling of g.
    if (auto bad = validate_l21(g, f)) {
        throw Error("internal: constructed labeling violates the distance rule at " +
                    std::to_string(bad->u) + "," + std::to_string(bad->v));
    }
    return f;
}

IslandSequence islands_of(const Labeling& f) { return f.island_sequence(); }

namespace {

// Connected components as vertex lists, each sorted ascending.
std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<int> comp(g.n, -1);
    int c = 0;
    for (int v = 0; v < g.n; ++v) {
        if (comp[v] != -1) continue;
        std::vector<int> stack = {v};
        comp[v] = c;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int w : g.adj[x]) {
                if (comp[w] == -1) {
                    comp[w] = c;
                    stack.push_back(w);
                }
            }
        }
        ++c;
    }
    std::vector<std::vector<int>> out(c);
    for (int v = 0; v < g.n; ++v) out[comp[v]].push_back(v);
    return out;
}

Graph induced(const Graph& g, const std::vector<int>& verts, std::vector<int>& to_local) {
    to_local.assign(g.n, -1);
    for (size_t i = 0; i < verts.size(); ++i) to_local[verts[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> es;
    for (int v : verts) {
        for (int w : g.adj[v]) {
            if (w > v && to_local[w] != -1) es.emplace_back(to_local[v], to_local[w]);
        }
    }
    return Graph::from_edges(static_cast<int>(verts.size()), es);
}

// Single path through all vertices of a path-shaped component.
std::vector<int> walk_path(const Graph& g) {
    int start = 0;
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) <= 1) start = v;
    }
    std::vector<int> out = {start};
    int prev = -1, cur = start;
    while (true) {
        int nxt = -1;
        for (int w : g.adj[cur]) {
            if (w != prev) nxt = w;
        }
        if (nxt == -1) break;
        out.push_back(nxt);
        prev = cur;
        cur = nxt;
    }
    return out;
}

// Cycle order starting at vertex 0.
std::vector<int> walk_cycle(const Graph& g) {
    std::vector<int> out = {0};
    int prev = -1, cur = 0;
    while (static_cast<int>(out.size()) < g.n) {
        int nxt = -1;
        for (int w : g.adj[cur]) {
            if (w != prev) {
                nxt = w;
                break;
            }
        }
        out.push_back(nxt);
        prev = cur;
        cur = nxt;
    }
    return out;
}

bool degree_formula_eligible(const Graph& g) {
    // connectivity and non-cycle shape are already known at the call site
    if (g.edge_count() < 1) return false;
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) <= 2) continue;
        int light = 0;
        for (int w : g.adj[v]) {
            if (g.degree(w) <= 2) ++light;
        }
        if (light < 3) return false;
    }
    return true;
}

}  // namespace

CoverResolution resolve_path_cover(const Graph& g, const OracleBudget& budget) {
    CoverResolution res;
    res.witness.host_n = g.n;
    if (g.n == 0) {
        res.method = "empty";
        return res;
    }
    std::vector<std::string> tags;
    bool witness_ok = true;
    for (const auto& verts : components(g)) {
        std::vector<int> to_local;
        Graph comp = induced(g, verts, to_local);
        int p = 0;
        std::vector<std::vector<int>> local_paths;
        std::string tag;
        Shape sh = classify(comp);
        bool complete = comp.edge_count() == comp.n * (comp.n - 1) / 2;
        if (sh == Shape::path) {
            p = 1;
            local_paths = {walk_path(comp)};
            tag = "path";
        } else if (sh == Shape::cycle) {
            p = 1;
            local_paths = {walk_cycle(comp)};
            tag = "cycle";
        } else if (complete) {
            p = 1;
            std::vector<int> all(comp.n);
            std::iota(all.begin(), all.end(), 0);
            local_paths = {all};
            tag = "complete";
        } else if (is_tree(comp)) {
            TreeCoverResult tr = tree_path_cover(comp);
            p = tr.p;
            local_paths = tr.witness.paths;
            tag = "tree-reduction";
        } else if (degree_formula_eligible(comp)) {
            p = theorem12_path_cover(comp);
            tag = "degree-formula";
            try {
                PathCovering w = oracle_one_min_cover(comp, budget);
                if (static_cast<int>(w.paths.size()) != p) {
                    throw Error("internal: degree formula disagrees with search on a " +
                                std::to_string(comp.n) + "-vertex component");
                }
                local_paths = w.paths;
            } catch (const ResourceError&) {
                witness_ok = false;
                tag += "(count only)";
            }
        } else {
            PathCovering w = oracle_one_min_cover(comp, budget);
            p = static_cast<int>(w.paths.size());
            local_paths = w.paths;
            tag = "search";
        }
        res.p += p;
        if (std::find(tags.begin(), tags.end(), tag) == tags.end()) tags.push_back(tag);
        for (auto& lp : local_paths) {
            std::vector<int> global;
            global.reserve(lp.size());
            for (int x : lp) global.push_back(verts[x]);
            res.witness.paths.push_back(std::move(global));
        }
    }
    if (!witness_ok) res.witness.paths.clear();
    for (size_t i = 0; i < tags.size(); ++i) {
        if (i) res.method += "+";
        res.method += tags[i];
    }
    if (witness_ok) {
        std::string why;
        if (!validate_covering(g, res.witness, &why)) {
            throw Error("internal: resolver witness invalid: " + why);
        }
        if (static_cast<int>(res.witness.paths.size()) != res.p) {
            throw Error("internal: resolver count does not match its witness");
        }
    }
    return res;
}

LambdaRhoResult lambda_rho_of_complement(const Graph& g, const OracleBudget& budget) {
    LambdaRhoResult res;
    CoverResolution r = resolve_path_cover(g, budget);
    res.p = r.p;
    bool have_witness = !r.witness.paths.empty();
    if (r.p >= 2) {
        res.exact = true;
        res.lambda = g.n + r.p - 2;
        res.rho = r.p - 1;
        res.method = "cover:" + r.method;
        if (have_witness) res.certificate = labeling_from_cover(complement(g), r.witness);
        return res;
    }
    // One covering path: only the span bound n-1 follows. Small instances are
    // settled exactly by the search.
    if (g.n <= budget.max_n_labeling) {
        OracleRhoResult o = oracle_rho(complement(g), budget);
        res.exact = true;
        res.lambda = o.lambda;
        res.rho = o.rho;
        res.certificate = o.witness;
        res.method = "search";
        return res;
    }
    res.exact = false;
    res.lambda = g.n - 1;
    res.rho = 0;
    res.method = "bound:" + r.method;
    if (have_witness) res.certificate = labeling_from_cover(complement(g), r.witness);
    return res;
}

std::string labeling_to_json(const Labeling& f) {
    nlohmann::ordered_json j;
    j["labels"] = f.labels;
    j["span"] = f.span();
    j["holes"] = f.holes();
    auto arr = nlohmann::ordered_json::array();
    for (auto [a, b] : f.islands()) arr.push_back({a, b});
    j["islands"] = arr;
    return j.dump(2);
}

Labeling labeling_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("labeling JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("labels") || !j["labels"].is_array()) {
        throw ParseError("labeling JSON: expected an object with a \"labels\" array");
    }
    Labeling f;
    for (const auto& x : j["labels"]) {
        if (!x.is_number_integer() || x.get<int>() < 0) {
            throw ParseError("labeling JSON: labels must be nonnegative integers");
        }
        f.labels.push_back(x.get<int>());
    }
    return f;
}

}  // namespace pcov
