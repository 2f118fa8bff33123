#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "pcov/graph.hpp"
#include "pcov/labeling.hpp"
#include "pcov/path_cover.hpp"

namespace pcov {

// Hard limits for the exhaustive searches. Exceeding a limit raises
// ResourceError; the oracles never trade the budget for a wrong answer.
struct OracleBudget {
    int max_n_cover = 16;       // vertex cap for path-covering searches
    int max_n_labeling = 8;     // vertex cap for lambda/rho searches
    long long max_coverings = 2'000'000;  // cap on enumerated optima
};

using SequenceSet = std::set<PathSequence>;

struct OracleCoverResult {
    int p = 0;
    SequenceSet sequences;                 // over all minimum coverings
    std::vector<PathCovering> coverings;   // all optima, up to the budget cap
};

// Ground truth by branch and bound over edge subsets: a maximum spanning
// linear forest (acyclic, max degree 2) with k edges yields p = n - k.
// A first pass finds the optimum, a second enumerates every optimal forest.
OracleCoverResult oracle_path_cover(const Graph& g, const OracleBudget& budget = {});

// Maximum linear-forest edge count only, with a selectable edge scan order so
// tests can cross-check two independent searches.
int oracle_max_linear_forest(const Graph& g, bool reverse_edge_order,
                             const OracleBudget& budget = {});

// A single minimum covering: phase 1 plus the first optimal subset found,
// without enumerating the rest. Used where only a witness is needed.
PathCovering oracle_one_min_cover(const Graph& g, const OracleBudget& budget = {});

struct OracleLambdaResult {
    int lambda = 0;
    Labeling witness;
};

// Minimum span of a distance-two labeling by iterative deepening on the span,
// backtracking over vertices in BFS order from a maximum-degree vertex, with
// the reflection symmetry broken on the first vertex's label.
OracleLambdaResult oracle_lambda(const Graph& g, const OracleBudget& budget = {});

struct OracleRhoResult {
    int lambda = 0;
    int rho = 0;
    Labeling witness;  // minimum-span labeling attaining rho holes
};

// Minimum hole count over all minimum-span labelings, by exhaustive search at
// span = lambda with a hole-count lower-bound prune.
OracleRhoResult oracle_rho(const Graph& g, const OracleBudget& budget = {});

// Labeled tree on n >= 2 vertices from a length n-2 sequence over 0..n-1.
Graph prufer_decode(int n, const std::vector<int>& seq);
std::vector<int> prufer_encode(const Graph& t);

// Calls fn with every labeled tree on n vertices (n^(n-2) of them; n <= 8
// keeps this sane). fn returning false stops the enumeration early.
void enumerate_trees(int n, const std::function<bool(const Graph&)>& fn);

Graph random_tree(int n, std::mt19937_64& rng);

// Canonical string of a tree up to isomorphism (centroid-rooted AHU form);
// used to deduplicate isomorphic instances in the validation suites.
std::string tree_canonical_string(const Graph& t);

}  // namespace pcov
