#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "arborize/graph.hpp"

namespace arborize {

// Single-sided assignment: give every copy to one endpoint so that vertex v
// receives at most cap[v] copies. Infeasible instances yield a dense set with
// e(S) > sum of caps over S (source side of the min cut).
struct IncidenceAssignment {
    bool feasible = false;
    std::vector<int> at_u; // per edge index: copies assigned to endpoint u
    std::vector<Vertex> dense_set;
};
IncidenceAssignment assign_copies_to_endpoints(const Multigraph& g,
                                               const std::vector<long long>& cap);

struct OrientationInfeasibility {
    enum class Kind { vertex_condition, set_condition };
    Kind kind = Kind::vertex_condition;
    Vertex vertex = -1;      // vertex condition: d(v) > g(v) + h(v)
    std::vector<Vertex> S;   // set condition: e(S) > min{g(S), h(S)}
    long long e_S = 0;
    long long g_S = 0;
    long long h_S = 0;
};

struct OrientationResult {
    std::optional<Digraph> orientation;
    // Per edge index of the input: copies directed u->v and v->u.
    std::vector<std::pair<int, int>> directions;
    std::optional<OrientationInfeasibility> infeasibility;

    bool feasible() const { return orientation.has_value(); }
};

// Orientation with indegree <= g(v) and outdegree <= h(v); exists iff
// d(v) <= g(v) + h(v) everywhere and e(S) <= min{g(S), h(S)} for all S
// (Entringer-Tolman). Caps may be zero.
OrientationResult orient(const Multigraph& g, const DegreeFn& in_cap, const DegreeFn& out_cap);

struct EtConditionReport {
    bool cond1_ok = true; // d(v) <= g(v) + h(v) for all v
    bool cond2_ok = true; // e(S) <= min{g(S), h(S)} for all S
    std::optional<Vertex> bad_vertex;
    std::vector<Vertex> bad_set;
    long long bad_e_S = 0;
};

// Exhaustive check of both orientation conditions; |V| <= 20.
EtConditionReport check_orientation_conditions(const Multigraph& g, const DegreeFn& in_cap,
                                               const DegreeFn& out_cap);

struct BranchingOrientation {
    Digraph digraph;
    std::vector<std::pair<int, int>> directions; // as in OrientationResult
};

// Orientation with max indegree <= d and weighted outdegree max <= d, for use
// ahead of branching decompositions. Requires max{delta_f, arboricity} <= d.
BranchingOrientation orient_for_branchings(const Multigraph& g, const DegreeFn& f, int d);

} // namespace arborize
