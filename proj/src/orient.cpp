#include "arborize/orient.hpp"

#include <algorithm>
#include <string>

#include "arborize/density.hpp"
#include "arborize/flow.hpp"

namespace arborize {

IncidenceAssignment assign_copies_to_endpoints(const Multigraph& g,
                                               const std::vector<long long>& cap) {
    int n = g.vertex_count();
    int m = static_cast<int>(g.edges().size());
    long long total = g.total_multiplicity();
    FlowNetwork net(n + m + 2);
    int source = n + m, sink = n + m + 1;
    std::vector<int> to_u(m);
    for (int i = 0; i < m; ++i) {
        net.add_arc(source, n + i, g.edges()[i].mult);
        to_u[i] = net.add_arc(n + i, g.edges()[i].u, 4 * total + 1);
        net.add_arc(n + i, g.edges()[i].v, 4 * total + 1);
    }
    for (Vertex v = 0; v < n; ++v) net.add_arc(v, sink, cap[v]);

    IncidenceAssignment out;
    if (net.max_flow(source, sink) == total) {
        out.feasible = true;
        out.at_u.resize(m);
        for (int i = 0; i < m; ++i) out.at_u[i] = static_cast<int>(net.flow_on(to_u[i]));
        return out;
    }
    std::vector<bool> side = net.min_cut_source_side(source);
    for (Vertex v = 0; v < n; ++v)
        if (side[v]) out.dense_set.push_back(v);
    return out;
}

namespace {

long long edges_inside(const Multigraph& g, const std::vector<Vertex>& s) {
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex v : s) in[v] = 1;
    long long e = 0;
    for (const Edge& ed : g.edges())
        if (in[ed.u] && in[ed.v]) e += ed.mult;
    return e;
}

OrientationInfeasibility set_witness(const Multigraph& g, const DegreeFn& in_cap,
                                     const DegreeFn& out_cap, std::vector<Vertex> s) {
    OrientationInfeasibility inf;
    inf.kind = OrientationInfeasibility::Kind::set_condition;
    inf.S = std::move(s);
    inf.e_S = edges_inside(g, inf.S);
    for (Vertex v : inf.S) {
        inf.g_S += in_cap(v);
        inf.h_S += out_cap(v);
    }
    return inf;
}

} // namespace

OrientationResult orient(const Multigraph& g, const DegreeFn& in_cap, const DegreeFn& out_cap) {
    if (in_cap.min_allowed() < 0 || out_cap.min_allowed() < 0)
        throw input_error("orientation caps must be nonnegative");
    OrientationResult result;
    int n = g.vertex_count();
    std::vector<int> deg = g.degrees();
    for (Vertex v = 0; v < n; ++v) {
        if (deg[v] > in_cap(v) + out_cap(v)) {
            OrientationInfeasibility inf;
            inf.kind = OrientationInfeasibility::Kind::vertex_condition;
            inf.vertex = v;
            result.infeasibility = inf;
            return result;
        }
    }

    // Heads are assigned by flow; the outdegree cap becomes a lower bound on
    // the heads each vertex must absorb: d(v) - h(v) <= heads(v) <= g(v).
    int m = static_cast<int>(g.edges().size());
    long long total = g.total_multiplicity();
    FlowNetwork net(n + m + 2);
    int source = n + m, sink = n + m + 1;
    std::vector<int> head_u(m);
    for (int i = 0; i < m; ++i) {
        net.add_arc(source, n + i, g.edges()[i].mult, g.edges()[i].mult);
        head_u[i] = net.add_arc(n + i, g.edges()[i].u, 4 * total + 1);
        net.add_arc(n + i, g.edges()[i].v, 4 * total + 1);
    }
    for (Vertex v = 0; v < n; ++v)
        net.add_arc(v, sink, in_cap(v), std::max<long long>(0, deg[v] - out_cap(v)));

    if (net.solve_with_lower_bounds(source, sink)) {
        Digraph d(n);
        result.directions.resize(m);
        for (int i = 0; i < m; ++i) {
            const Edge& e = g.edges()[i];
            int heads_at_u = static_cast<int>(net.flow_on(head_u[i]));
            int u_to_v = e.mult - heads_at_u;
            result.directions[i] = {u_to_v, heads_at_u};
            if (u_to_v > 0) d.add_arc(e.u, e.v, u_to_v);
            if (heads_at_u > 0) d.add_arc(e.v, e.u, heads_at_u);
        }
        result.orientation = std::move(d);
        return result;
    }

    // Condition (1) holds, so one side of condition (2) must fail; re-run the
    // plain head/tail assignments to extract the dense set.
    std::vector<long long> caps(n);
    for (Vertex v = 0; v < n; ++v) caps[v] = in_cap(v);
    IncidenceAssignment heads = assign_copies_to_endpoints(g, caps);
    if (!heads.feasible) {
        result.infeasibility = set_witness(g, in_cap, out_cap, heads.dense_set);
        return result;
    }
    for (Vertex v = 0; v < n; ++v) caps[v] = out_cap(v);
    IncidenceAssignment tails = assign_copies_to_endpoints(g, caps);
    if (!tails.feasible) {
        result.infeasibility = set_witness(g, in_cap, out_cap, tails.dense_set);
        return result;
    }
    throw std::logic_error("orientation infeasible but both cap conditions passed");
}

EtConditionReport check_orientation_conditions(const Multigraph& g, const DegreeFn& in_cap,
                                               const DegreeFn& out_cap) {
    int n = g.vertex_count();
    if (n > 20) throw budget_error("subset condition check limited to 20 vertices, got " +
                                   std::to_string(n));
    EtConditionReport report;
    std::vector<int> deg = g.degrees();
    for (Vertex v = 0; v < n && report.cond1_ok; ++v) {
        if (deg[v] > in_cap(v) + out_cap(v)) {
            report.cond1_ok = false;
            report.bad_vertex = v;
        }
    }

    std::vector<std::vector<long long>> pair_mult(n, std::vector<long long>(n, 0));
    for (const Edge& e : g.edges()) {
        pair_mult[e.u][e.v] += e.mult;
        pair_mult[e.v][e.u] += e.mult;
    }
    std::vector<long long> e_in(1ull << n, 0);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        int v = __builtin_ctz(mask);
        unsigned rest = mask & (mask - 1);
        long long e = e_in[rest];
        for (unsigned r = rest; r; r &= r - 1) e += pair_mult[v][__builtin_ctz(r)];
        e_in[mask] = e;
        long long g_s = 0, h_s = 0;
        for (unsigned r = mask; r; r &= r - 1) {
            g_s += in_cap(__builtin_ctz(r));
            h_s += out_cap(__builtin_ctz(r));
        }
        if (report.cond2_ok && e > std::min(g_s, h_s)) {
            report.cond2_ok = false;
            report.bad_e_S = e;
            for (int x = 0; x < n; ++x)
                if (mask & (1u << x)) report.bad_set.push_back(x);
        }
    }
    return report;
}

BranchingOrientation orient_for_branchings(const Multigraph& g, const DegreeFn& f, int d) {
    if (f.min_allowed() < 2) throw input_error("branching orientation requires f >= 2");
    int df = delta_f(g, f);
    if (df > d)
        throw input_error("orientation bound " + std::to_string(d) +
                          " below weighted max degree " + std::to_string(df));
    int a = arboricity(g).value;
    if (a > d)
        throw input_error("orientation bound " + std::to_string(d) + " below arboricity " +
                          std::to_string(a));

    std::map<Vertex, int> in_caps, out_caps;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        in_caps[v] = d;
        out_caps[v] = d * (f(v) - 1);
    }
    OrientationResult r = orient(g, DegreeFn(d, in_caps, 0), DegreeFn(1, out_caps, 0));
    if (!r.feasible())
        throw std::logic_error("capped orientation must exist when delta_f and arboricity fit");
    return {std::move(*r.orientation), std::move(r.directions)};
}

} // namespace arborize
