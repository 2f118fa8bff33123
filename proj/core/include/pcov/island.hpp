#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pcov/graph.hpp"
#include "pcov/oracle.hpp"

namespace pcov {

// Marks used by the recursive family construction: A-vertices must stay
// internal in every minimum path covering, B-vertices may end a path but only
// as the end of a vine with a fixed vertex count. Leaves are always O.
enum class Mark : char { O = 'O', A = 'A', B = 'B' };

struct LabeledTree {
    Graph tree;
    std::vector<Mark> mark;
    // For B-marked vertices: vertex count of a vine of the star that
    // introduced them (0 elsewhere). Needed by the Type-3 precondition.
    std::vector<int> b_vine_count;

    // Metadata present on freshly built stars (-1/0 on composites):
    int star_center = -1;
    int star_vine_len = 0;
};

// Star with `vine_count` >= 2 vines of `vine_vertices` >= 1 vertices each.
// Center index 0, marked A; each vine runs center-outward; the vertex next to
// the center is marked B (it is a leaf, hence O, when vine_vertices == 1);
// vine interiors are A, vine ends O. Two vines make an odd path whose middle
// acts as the center.
LabeledTree make_labeled_generalized_star(int vine_count, int vine_vertices);

// Path 0-1-...-n-1 with n >= 3; internal vertices marked A.
LabeledTree make_labeled_path(int n);

// Attach star (>= 3 vines) by a new edge from u (marked A in t) to the
// star's center. Attached ids are shifted by t.tree.n.
LabeledTree apply_type1(const LabeledTree& t, int u, const LabeledTree& star);

// Attach path p (>= 3 vertices) by a new edge from u (marked A) to a
// non-leaf vertex `anchor` of p.
LabeledTree apply_type2(const LabeledTree& t, int u, const LabeledTree& p, int anchor);

// Attach star (>= 2 vines) by a new edge from u (marked B) to the star's
// center; the star's vine vertex count must equal t.b_vine_count[u].
LabeledTree apply_type3(const LabeledTree& t, int u, const LabeledTree& star);

// One step of a replayable construction. Vertex ids are final (post-shift),
// so replaying a script rebuilds the exact same graph.
struct ScriptOp {
    std::string op;         // "base" | "type1" | "type2" | "type3"
    std::string base_kind;  // base only: "star" | "path"
    int host = -1;          // type1/2/3: the attachment vertex in the host tree
    int anchor = -1;        // star center, or the path vertex joined to host
    std::vector<std::vector<int>> vines;  // star ops: vines center-outward
    std::vector<int> path;  // path ops: vertices in path order
};

using ConstructionScript = std::vector<ScriptOp>;

// Rebuilds the labeled tree a script describes, validating every op's
// preconditions (marks, vine-count matches, anchors). ConditionError on any
// violation.
LabeledTree replay_script(const ConstructionScript& script);

std::string script_to_json(const ConstructionScript& script);
ConstructionScript script_from_json(const std::string& text);

struct GeneratedTree {
    LabeledTree tree;
    ConstructionScript script;
};

// Random member of the recursive family F with at most max_n vertices,
// deterministic in the seed. The script replays to the same tree.
GeneratedTree generate_F(std::uint64_t seed, int max_n);

// One reduction step of the uniqueness decision procedure: the component cut
// off behind edge u-v, which is always v plus the light chains hanging off it.
struct DuisRecord {
    int v = -1;        // farthest heavy vertex at this step
    int u = -1;        // its neighbor toward the root leaf; stays behind
    bool star = false;     // >= 3 chains (all equal, or the verdict is multiple)
    bool middle = false;   // path case with v exactly in the middle
    int k = 0;             // star: chain vertex count; path: path vertex count
    std::vector<std::vector<int>> chains;  // from v outward
    // 0: no state change at u, 1: u pinned internal, 2: u constrained to end
    // only paths of `constraint` vertices.
    int action = 0;
    int constraint = 0;
};

struct DuisVerdict {
    bool unique = false;
    std::vector<DuisRecord> trace;
    std::vector<int> final_path;  // remaining path in order (empty on multiple)
    int final_reject_vertex = -1; // vertex that triggered "multiple", if any
    long long ops = 0;            // basic-operation counter (linearity checks)
};

// Decides in linear time whether a tree admits exactly one path sequence
// across all of its minimum path coverings.
DuisVerdict duis(const Graph& t);

// Ground truth: the set of path sequences over all minimum coverings,
// straight from the enumeration oracle.
SequenceSet sequence_set(const Graph& t, const OracleBudget& budget = {});

// For trees the decision procedure accepts (n >= 3): a construction script
// that replays to exactly t, derived from the reduction trace (removed
// components become attached units, path units merge into end-attached stars
// when the recorded constraints demand it, and the base is chosen so every
// attachment is a valid op). std::nullopt when the verdict is "multiple" or
// no consistent assembly exists.
std::optional<ConstructionScript> certify_F_membership(const Graph& t);

}  // namespace pcov
