#include "pcov/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "pcov/island.hpp"
#include "pcov/labeling.hpp"
#include "pcov/oracle.hpp"
#include "pcov/path_cover.hpp"

namespace pcov {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Collects failures, keeping only the first counterexample.
struct Recorder {
    SuiteResult& r;

    void fail(const Graph& g, const std::string& why) {
        ++r.failures;
        if (r.first_counterexample.empty()) {
            r.first_counterexample = to_edge_list(g);
            r.detail = why;
        }
    }
};

bool every_heavy_has_light_neighbor(const Graph& g) {
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) <= 2) continue;
        bool light = false;
        for (int w : g.adj[v])
            if (g.degree(w) <= 2) light = true;
        if (!light) return false;
    }
    return true;
}

int light_neighbor_count(const Graph& g, int v) {
    int c = 0;
    for (int w : g.adj[v])
        if (g.degree(w) <= 2) ++c;
    return c;
}

}  // namespace

SuiteResult suite_tree_laws(int max_n, bool check_bounds, bool check_sparse,
                            bool check_general) {
    SuiteResult r;
    r.suite = "tree-laws";
    Recorder rec{r};
    const auto t0 = Clock::now();

    for (int n = 2; n <= max_n; ++n) {
        enumerate_trees(n, [&](const Graph& t) {
            ++r.instances;
            const auto red = tree_path_cover(t);
            const auto orc = oracle_path_cover(t);
            if (red.p != orc.p) {
                std::ostringstream os;
                os << "tree reduction count " << red.p << " vs oracle " << orc.p;
                rec.fail(t, os.str());
                return true;
            }
            std::string why;
            if (!validate_covering(t, red.witness, &why)) {
                rec.fail(t, "invalid reduction witness: " + why);
                return true;
            }
            if (static_cast<int>(red.witness.paths.size()) != red.p) {
                rec.fail(t, "witness path count differs from reported count");
                return true;
            }
            const auto st = stats(t);
            if (check_bounds) {
                const auto b = formula_bounds(t);
                if (red.p < b.lower || red.p > b.upper) {
                    std::ostringstream os;
                    os << "count " << red.p << " outside [" << b.lower << ", "
                       << b.upper << "]";
                    rec.fail(t, os.str());
                    return true;
                }
            }
            if (check_sparse && (is_2_sparse(t) != (red.p == st.leaves - 1))) {
                rec.fail(t, "2-sparse biconditional violated");
                return true;
            }
            if (check_general &&
                (is_general_2_sparse(t) != (red.p == st.leaves - st.heavy_edges - 1))) {
                rec.fail(t, "general 2-sparse biconditional violated");
                return true;
            }
            return true;
        });
    }
    r.ms = ms_since(t0);
    return r;
}

SuiteResult suite_matching_formula(int max_n) {
    SuiteResult r;
    r.suite = "matching-formula";
    Recorder rec{r};
    const auto t0 = Clock::now();

    for (int n = 2; n <= max_n; ++n) {
        enumerate_trees(n, [&](const Graph& t) {
            if (!every_heavy_has_light_neighbor(t)) return true;
            ++r.instances;
            const auto form = theorem7_path_cover(t);
            const auto red = tree_path_cover(t);
            const auto orc = oracle_path_cover(t);
            if (form.p != red.p || red.p != orc.p) {
                std::ostringstream os;
                os << "closed form " << form.p << " (s=" << form.data.s
                   << ", t=" << form.data.t << ") vs reduction " << red.p
                   << " vs oracle " << orc.p;
                rec.fail(t, os.str());
            }
            return true;
        });
    }
    r.ms = ms_since(t0);
    return r;
}

SuiteResult suite_complement_lambda(int max_n) {
    SuiteResult r;
    r.suite = "complement-lambda";
    Recorder rec{r};
    const auto t0 = Clock::now();

    OracleBudget budget;
    budget.max_n_labeling = std::max(budget.max_n_labeling, max_n);

    std::set<std::string> seen;
    for (int n = 2; n <= max_n; ++n) {
        enumerate_trees(n, [&](const Graph& t) {
            if (!seen.insert(tree_canonical_string(t)).second) return true;
            ++r.instances;
            const int p = tree_path_cover(t).p;
            const Graph c = complement(t);
            if (p >= 2) {
                const auto truth = oracle_rho(c, budget);
                if (truth.lambda != n + p - 2 || truth.rho != p - 1) {
                    std::ostringstream os;
                    os << "expected lambda " << n + p - 2 << " rho " << p - 1
                       << ", oracle found lambda " << truth.lambda << " rho "
                       << truth.rho;
                    rec.fail(t, os.str());
                    return true;
                }
                const auto lr = lambda_rho_of_complement(t, budget);
                if (!lr.exact || lr.lambda != truth.lambda || lr.rho != truth.rho ||
                    !lr.certificate) {
                    rec.fail(t, "resolver disagrees with oracle on lambda/rho");
                    return true;
                }
                if (validate_l21(c, *lr.certificate) ||
                    lr.certificate->span() != lr.lambda ||
                    lr.certificate->holes() != lr.rho) {
                    rec.fail(t, "certificate labeling invalid or off-target");
                    return true;
                }
            } else {
                const auto truth = oracle_lambda(c, budget);
                if (truth.lambda > n - 1) {
                    std::ostringstream os;
                    os << "single-path tree complement exceeds the n-1 bound: "
                       << truth.lambda;
                    rec.fail(t, os.str());
                    return true;
                }
            }
            return true;
        });
    }
    r.ms = ms_since(t0);
    return r;
}

SuiteResult suite_degree_formula(int count, std::uint64_t seed) {
    SuiteResult r;
    r.suite = "degree-formula";
    Recorder rec{r};
    const auto t0 = Clock::now();

    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };

    while (r.instances < count) {
        // Random tree, pendants added until every heavy vertex has three
        // light neighbors, optionally a couple of leaf-leaf edges on top.
        const int base_n = pick(2, 8);
        Graph t = random_tree(base_n, rng);
        std::vector<std::pair<int, int>> es = t.edges();
        int n = base_n;
        for (int v = 0; v < base_n; ++v) {
            if (t.degree(v) <= 2) continue;
            for (int need = 3 - light_neighbor_count(t, v); need > 0; --need)
                es.emplace_back(v, n++);
        }
        Graph g = Graph::from_edges(n, es);
        const int extra = pick(0, 2);
        for (int i = 0; i < extra; ++i) {
            std::vector<int> low;
            for (int v = 0; v < g.n; ++v)
                if (g.degree(v) <= 1) low.push_back(v);
            if (low.size() < 2) break;
            const int a = low[pick(0, static_cast<int>(low.size()) - 1)];
            int b = a;
            for (int tries = 0; tries < 20 && (b == a || g.has_edge(a, b)); ++tries)
                b = low[pick(0, static_cast<int>(low.size()) - 1)];
            if (b == a || g.has_edge(a, b)) break;
            es = g.edges();
            es.emplace_back(std::min(a, b), std::max(a, b));
            g = Graph::from_edges(g.n, es);
        }
        if (g.n > 12 || classify(g) == Shape::cycle) continue;

        ++r.instances;
        const int form = theorem12_path_cover(g);
        const auto orc = oracle_path_cover(g);
        if (form != orc.p) {
            std::ostringstream os;
            os << "closed form " << form << " vs oracle " << orc.p;
            rec.fail(g, os.str());
        }
    }
    r.ms = ms_since(t0);
    return r;
}

SuiteResult suite_expansion_formula(int count, std::uint64_t seed) {
    SuiteResult r;
    r.suite = "expansion-formula";
    Recorder rec{r};
    const auto t0 = Clock::now();

    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };

    while (r.instances < count) {
        const int n = pick(2, 6);
        Graph t = random_tree(n, rng);
        if (!is_2_sparse(t)) continue;
        std::vector<int> orders(t.edge_count());
        int total = n;
        for (int& q : orders) {
            q = pick(2, 4);
            total += q - 2;
        }
        if (total > 14) continue;

        ++r.instances;
        const auto res = theorem13_path_cover(t, orders);
        const int leaves = stats(t).leaves;
        std::string why;
        if (res.p != leaves - 1) {
            rec.fail(t, "expansion count differs from leaves-1");
            continue;
        }
        if (!validate_covering(res.expansion, res.witness, &why)) {
            rec.fail(res.expansion, "invalid threaded witness: " + why);
            continue;
        }
        if (static_cast<int>(res.witness.paths.size()) != res.p) {
            rec.fail(res.expansion, "witness path count differs from reported count");
            continue;
        }
        const auto orc = oracle_path_cover(res.expansion);
        if (orc.p != res.p) {
            std::ostringstream os;
            os << "closed form " << res.p << " vs oracle " << orc.p;
            rec.fail(res.expansion, os.str());
        }
    }
    r.ms = ms_since(t0);
    return r;
}

SuiteResult suite_duis_agreement(int exhaustive_max_n, int random_min_n,
                                 int random_max_n, int samples, std::uint64_t seed) {
    SuiteResult r;
    r.suite = "duis-agreement";
    Recorder rec{r};
    const auto t0 = Clock::now();

    auto check = [&](const Graph& t) {
        ++r.instances;
        const bool fast = duis(t).unique;
        const bool truth = sequence_set(t).size() == 1;
        if (fast != truth) {
            std::ostringstream os;
            os << "decision says " << (fast ? "unique" : "multiple")
               << ", enumeration says " << (truth ? "unique" : "multiple");
            rec.fail(t, os.str());
        }
    };

    for (int n = 1; n <= exhaustive_max_n; ++n)
        enumerate_trees(n, [&](const Graph& t) {
            check(t);
            return true;
        });

    std::mt19937_64 rng(seed);
    for (int n = random_min_n; n <= random_max_n; ++n)
        for (int i = 0; i < samples; ++i) check(random_tree(n, rng));

    r.ms = ms_since(t0);
    return r;
}

SuiteResult suite_family(int count, std::uint64_t seed) {
    SuiteResult r;
    r.suite = "family";
    Recorder rec{r};
    const auto t0 = Clock::now();

    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };

    // Positive half: generated members must be unique, singleton-sequenced,
    // and certifiable by a script that rebuilds them.
    for (int i = 0; i < count; ++i) {
        const int max_n = pick(4, 12);
        const GeneratedTree gt = generate_F(rng(), max_n);
        const Graph& t = gt.tree.tree;
        ++r.instances;
        if (!duis(t).unique) {
            rec.fail(t, "generated member judged multiple");
            continue;
        }
        if (sequence_set(t).size() != 1) {
            rec.fail(t, "generated member has more than one sequence");
            continue;
        }
        const auto cert = certify_F_membership(t);
        if (!cert) {
            rec.fail(t, "no membership certificate found for a generated member");
            continue;
        }
        const LabeledTree rebuilt = replay_script(*cert);
        if (!(rebuilt.tree == t)) {
            rec.fail(t, "membership certificate replays to a different tree");
            continue;
        }
    }

    // Negative half: 2-sparse trees that are neither paths nor generalized
    // stars always admit several sequences.
    int negatives = 0;
    while (negatives < count) {
        const int n = pick(4, 12);
        Graph t = random_tree(n, rng);
        if (!is_2_sparse(t)) continue;
        const Shape s = classify(t);
        if (s != Shape::tree) continue;
        ++negatives;
        ++r.instances;
        if (duis(t).unique) {
            rec.fail(t, "2-sparse non-star tree judged unique");
            continue;
        }
        if (sequence_set(t).size() < 2) {
            rec.fail(t, "2-sparse non-star tree has fewer than two sequences");
            continue;
        }
    }

    r.ms = ms_since(t0);
    return r;
}

SuiteResult suite_duis_linearity() {
    SuiteResult r;
    r.suite = "duis-linearity";
    const auto t0 = Clock::now();

    std::mt19937_64 rng(20260816);
    const std::vector<int> sizes = {100, 1000, 10000};
    std::vector<double> worst(sizes.size(), 0.0);

    auto path_graph = [](int n) {
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
        return Graph::from_edges(n, es);
    };
    auto spider = [](int n) {
        std::vector<std::pair<int, int>> es;
        for (int i = 1; i < n; ++i) es.emplace_back(i % 50 == 1 ? 0 : i - 1, i);
        return Graph::from_edges(n, es);
    };

    for (std::size_t si = 0; si < sizes.size(); ++si) {
        const int n = sizes[si];
        std::vector<Graph> cases = {path_graph(n), spider(n)};
        for (int i = 0; i < 5; ++i) cases.push_back(random_tree(n, rng));
        for (const Graph& t : cases) {
            ++r.instances;
            const auto v = duis(t);
            worst[si] = std::max(worst[si], static_cast<double>(v.ops) / n);
        }
    }

    // Per-vertex work must not grow with n, and the large run must be quick.
    double wall = 1e18;
    const Graph big = random_tree(10000, rng);
    for (int rep = 0; rep < 3; ++rep) {
        const auto w0 = Clock::now();
        (void)duis(big);
        wall = std::min(wall, ms_since(w0));
    }

    std::ostringstream os;
    os << "ops-per-vertex worst case: n=100 -> " << worst[0] << ", n=1000 -> "
       << worst[1] << ", n=10000 -> " << worst[2] << "; n=10000 wall " << wall
       << " ms";
    r.detail = os.str();
    if (worst[2] > 2.0 * worst[0] + 1.0) ++r.failures;
    if (wall >= 100.0) ++r.failures;

    r.ms = ms_since(t0);
    return r;
}

}  // namespace pcov
