#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pcov/graph.hpp"

namespace pcov {

// Outcome of one validation suite run. On failure, first_counterexample holds
// the smallest failing instance as edge-list text (self-reproducing input).
struct SuiteResult {
    std::string suite;
    long long instances = 0;
    long long failures = 0;
    std::string first_counterexample;
    std::string detail;
    double ms = 0.0;
    bool pass() const { return failures == 0; }
};

// Exhaustive labeled trees 2..max_n: covering bounds, witness validity, and
// oracle equality for the linear-time tree covering. `check_sparse` adds the
// 2-sparse biconditional (count == leaves-1), `check_general` the general
// 2-sparse biconditional (count == leaves-heavy_edges-1).
SuiteResult suite_tree_laws(int max_n, bool check_bounds, bool check_sparse,
                            bool check_general);

// Exhaustive labeled trees filtered to "every heavy vertex has a light
// neighbor": closed form == tree reduction == oracle.
SuiteResult suite_matching_formula(int max_n);

// Exhaustive labeled trees: for covering count p >= 2, the complement's
// minimum labeling span is n+p-2 and its hole index p-1 (lambda/rho oracles,
// deduplicated per isomorphism class), and the constructed certificate
// validates with exactly p-1 holes. Trees with p == 1 check the n-1 bound.
SuiteResult suite_complement_lambda(int max_n);

// Random eligible instances (every heavy vertex >= 3 light neighbors):
// closed form == oracle.
SuiteResult suite_degree_formula(int count, std::uint64_t seed);

// Random 2-sparse trees expanded edge-by-edge into cliques of order 2..4:
// count == leaves-1 == oracle, witness valid.
SuiteResult suite_expansion_formula(int count, std::uint64_t seed);

// Uniqueness decision vs. enumerated sequence sets: exhaustive trees up to
// exhaustive_max_n, plus `samples` random trees per n in [random_min_n,
// random_max_n]. Prints the minimal counterexample on any disagreement.
SuiteResult suite_duis_agreement(int exhaustive_max_n, int random_min_n,
                                 int random_max_n, int samples, std::uint64_t seed);

// Positive family: generated members are unique with singleton sequence sets
// and certifiable (scripts replay to the input). Negative family: random
// 2-sparse trees that are neither paths nor generalized stars are multiple
// with >= 2 sequences.
SuiteResult suite_family(int count, std::uint64_t seed);

// Basic-operation counts of the uniqueness decision stay linear in n and the
// n = 10000 run finishes within the wall budget.
SuiteResult suite_duis_linearity();

}  // namespace pcov
