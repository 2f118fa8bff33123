#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcov/graph.hpp"
#include "pcov/path_cover.hpp"

namespace pcov {

// Island: maximal run of consecutive used labels, stored as [first, last].
using Island = std::pair<int, int>;

// Nondecreasing island cardinalities of a labeling.
using IslandSequence = std::vector<int>;

// Vertex labeling with labels >= 0. A valid distance-two labeling keeps
// |f(u)-f(v)| >= 2 across edges and labels distinct at distance two.
struct Labeling {
    std::vector<int> labels;

    int span() const;
    std::vector<Island> islands() const;
    IslandSequence island_sequence() const;
    // Unused integers strictly between 0 and the span.
    int holes() const;
};

struct L21Violation {
    int u = -1;
    int v = -1;
    int dist = 0;  // 1 or 2
};

// std::nullopt when f is a valid distance-two labeling of g; otherwise the
// first offending vertex pair and their distance.
std::optional<L21Violation> validate_l21(const Graph& g, const Labeling& f);

// Turns a minimum path covering of g's complement into a labeling of g:
// paths sorted by (size, lexicographic vertex list), each traversed from its
// lower-indexed endpoint, labels consecutive within a path with one integer
// skipped between paths. Span n + p - 2, holes p - 1, islands = path sequence.
Labeling labeling_from_cover(const Graph& g, const PathCovering& cover_of_complement);

IslandSequence islands_of(const Labeling& f);

// How a path-covering count was obtained by the resolver.
struct CoverResolution {
    int p = 0;
    PathCovering witness;
    std::string method;  // per-component summary, e.g. "tree-reduction+cycle"
};

struct OracleBudget;  // oracle.hpp

// Minimum path covering of an arbitrary supported graph, per component:
// paths/cycles/complete graphs directly, trees by the linear-time reduction,
// graphs meeting the degree hypothesis by the closed form (witness via the
// oracle when n fits the budget), anything else by the oracle within budget.
CoverResolution resolve_path_cover(const Graph& g, const OracleBudget& budget);

struct LambdaRhoResult {
    int p = 0;             // minimum path covering count of the input graph
    bool exact = false;    // false: only the bound lambda <= n-1 is known
    int lambda = 0;        // exact value, or the n-1 upper bound when !exact
    int rho = 0;           // meaningful only when exact
    std::optional<Labeling> certificate;  // labeling of the complement
    std::string method;
};

// Lambda and hole index of g's complement via p = minimum path covering count
// of g: p >= 2 gives lambda = n + p - 2 and rho = p - 1 with a certificate
// labeling; p = 1 gives the bound lambda <= n - 1, made exact by the oracle
// when n fits the budget.
LambdaRhoResult lambda_rho_of_complement(const Graph& g, const OracleBudget& budget);

// JSON form {"labels":[...],"span":k,"holes":r,"islands":[[a,b],...]}.
std::string labeling_to_json(const Labeling& f);
Labeling labeling_from_json(const std::string& text);

}  // namespace pcov
