#include "arborize/certificate.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace arborize {

std::string to_string(DecompKind kind) {
    switch (kind) {
        case DecompKind::degree_f_forest: return "degree-f-forest";
        case DecompKind::degree_f_branching: return "degree-f-branching";
        case DecompKind::degree_f_pseudoforest: return "degree-f-pseudoforest";
        case DecompKind::plain_forest: return "plain-forest";
        case DecompKind::plain_pseudoforest: return "plain-pseudoforest";
    }
    return "?";
}

std::optional<DecompKind> decomp_kind_from_string(const std::string& s) {
    if (s == "degree-f-forest") return DecompKind::degree_f_forest;
    if (s == "degree-f-branching") return DecompKind::degree_f_branching;
    if (s == "degree-f-pseudoforest") return DecompKind::degree_f_pseudoforest;
    if (s == "plain-forest") return DecompKind::plain_forest;
    if (s == "plain-pseudoforest") return DecompKind::plain_pseudoforest;
    return std::nullopt;
}

namespace {

struct Dsu {
    std::vector<int> parent, size;
    explicit Dsu(int n) : parent(n), size(n, 1) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
        return true;
    }
};

VerifyResult fail_coverage(std::string message) {
    VerifyResult r;
    r.ok = false;
    r.violation = Violation{Violation::Type::coverage, -1, std::nullopt, {}, std::move(message)};
    return r;
}

VerifyResult fail_class(int cls, std::optional<Vertex> v, std::vector<Vertex> cycle,
                        std::string message) {
    VerifyResult r;
    r.ok = false;
    r.violation =
        Violation{Violation::Type::class_rule, cls, v, std::move(cycle), std::move(message)};
    return r;
}

// Path of vertices from u to v in an adjacency structure (exists by DSU check).
std::vector<Vertex> path_between(const std::vector<std::vector<Vertex>>& adj, Vertex u, Vertex v) {
    std::vector<int> prev(adj.size(), -2);
    std::deque<Vertex> q{u};
    prev[u] = -1;
    while (!q.empty()) {
        Vertex x = q.front();
        q.pop_front();
        if (x == v) break;
        for (Vertex y : adj[x])
            if (prev[y] == -2) {
                prev[y] = x;
                q.push_back(y);
            }
    }
    std::vector<Vertex> path;
    for (Vertex x = v; x != -1; x = prev[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

template <typename CopyT>
std::optional<VerifyResult> check_coverage(int expected_edges,
                                           const std::vector<CopyT>& entries,
                                           const DecompositionCertificate& cert) {
    if (static_cast<int>(cert.assignment.size()) != expected_edges)
        return fail_coverage("assignment covers " + std::to_string(cert.assignment.size()) +
                             " edge entries, graph has " + std::to_string(expected_edges));
    if (cert.k < 0) return fail_coverage("negative class count");
    if (cert.requires_f()) {
        if (!cert.f) return fail_coverage("certificate kind requires a degree function");
        if (cert.f->min_allowed() < 2)
            return fail_coverage("degree function for this kind must be >= 2 pointwise");
    }
    for (size_t i = 0; i < entries.size(); ++i) {
        if (static_cast<int>(cert.assignment[i].size()) != entries[i].mult)
            return fail_coverage("edge entry " + std::to_string(i) + " has " +
                                 std::to_string(cert.assignment[i].size()) +
                                 " class labels for multiplicity " +
                                 std::to_string(entries[i].mult));
        for (int cls : cert.assignment[i])
            if (cls < 0 || cls >= cert.k)
                return fail_coverage("class id " + std::to_string(cls) + " outside [0, " +
                                     std::to_string(cert.k) + ")");
    }
    return std::nullopt;
}

} // namespace

VerifyResult verify_certificate(const Multigraph& g, const DecompositionCertificate& cert) {
    if (cert.kind == DecompKind::degree_f_branching)
        throw input_error("branching certificates apply to digraphs");
    if (auto bad = check_coverage(static_cast<int>(g.edges().size()), g.edges(), cert)) return *bad;

    bool forest_kind =
        cert.kind == DecompKind::plain_forest || cert.kind == DecompKind::degree_f_forest;
    bool degree_bounded =
        cert.kind == DecompKind::degree_f_forest || cert.kind == DecompKind::degree_f_pseudoforest;

    int n = g.vertex_count();
    std::vector<std::vector<std::pair<Vertex, Vertex>>> by_class(cert.k);
    for (size_t i = 0; i < g.edges().size(); ++i)
        for (int cls : cert.assignment[i])
            by_class[cls].push_back({g.edges()[i].u, g.edges()[i].v});

    for (int cls = 0; cls < cert.k; ++cls) {
        if (degree_bounded) {
            std::vector<int> deg(n, 0);
            for (auto [u, v] : by_class[cls]) {
                ++deg[u];
                ++deg[v];
            }
            for (Vertex v = 0; v < n; ++v)
                if (deg[v] > (*cert.f)(v))
                    return fail_class(cls, v, {},
                                      "class " + std::to_string(cls) + " has degree " +
                                          std::to_string(deg[v]) + " > f(" + std::to_string(v) +
                                          ") = " + std::to_string((*cert.f)(v)));
        }
        if (forest_kind) {
            Dsu dsu(n);
            std::vector<std::vector<Vertex>> adj(n);
            for (auto [u, v] : by_class[cls]) {
                if (!dsu.unite(u, v)) {
                    std::vector<Vertex> cycle = path_between(adj, u, v);
                    return fail_class(cls, u, cycle,
                                      "class " + std::to_string(cls) + " contains a cycle through " +
                                          std::to_string(u));
                }
                adj[u].push_back(v);
                adj[v].push_back(u);
            }
        } else {
            // Pseudoforest: each component carries at most one cycle, i.e. at
            // most as many copies as vertices.
            Dsu dsu(n);
            for (auto [u, v] : by_class[cls]) dsu.unite(u, v);
            std::vector<int> comp_edges(n, 0), comp_vertices(n, 0);
            std::vector<bool> seen(n, false);
            for (auto [u, v] : by_class[cls]) {
                ++comp_edges[dsu.find(u)];
                for (Vertex x : {u, v})
                    if (!seen[x]) {
                        seen[x] = true;
                        ++comp_vertices[dsu.find(x)];
                    }
            }
            for (Vertex r = 0; r < n; ++r) {
                if (comp_edges[r] > comp_vertices[r]) {
                    std::vector<Vertex> comp;
                    for (Vertex x = 0; x < n; ++x)
                        if (seen[x] && dsu.find(x) == r) comp.push_back(x);
                    return fail_class(cls, comp.empty() ? std::optional<Vertex>{} : comp.front(),
                                      comp,
                                      "class " + std::to_string(cls) +
                                          " has a component with two cycles");
                }
            }
        }
    }
    return {};
}

VerifyResult verify_certificate(const Digraph& d, const DecompositionCertificate& cert) {
    if (cert.kind != DecompKind::degree_f_branching)
        throw input_error("digraph certificates must have kind degree-f-branching");
    if (auto bad = check_coverage(static_cast<int>(d.arcs().size()), d.arcs(), cert)) return *bad;

    int n = d.vertex_count();
    std::vector<std::vector<std::pair<Vertex, Vertex>>> by_class(cert.k);
    for (size_t i = 0; i < d.arcs().size(); ++i)
        for (int cls : cert.assignment[i])
            by_class[cls].push_back({d.arcs()[i].tail, d.arcs()[i].head});

    for (int cls = 0; cls < cert.k; ++cls) {
        std::vector<int> in(n, 0), out(n, 0);
        for (auto [t, h] : by_class[cls]) {
            ++out[t];
            ++in[h];
        }
        for (Vertex v = 0; v < n; ++v) {
            if (in[v] > 1)
                return fail_class(cls, v, {},
                                  "class " + std::to_string(cls) + " has indegree " +
                                      std::to_string(in[v]) + " at vertex " + std::to_string(v));
            if (out[v] > (*cert.f)(v) - 1)
                return fail_class(cls, v, {},
                                  "class " + std::to_string(cls) + " has outdegree " +
                                      std::to_string(out[v]) + " > f(" + std::to_string(v) +
                                      ")-1 = " + std::to_string((*cert.f)(v) - 1));
        }
        Dsu dsu(n);
        std::vector<std::vector<Vertex>> adj(n);
        for (auto [t, h] : by_class[cls]) {
            if (!dsu.unite(t, h)) {
                std::vector<Vertex> cycle = path_between(adj, t, h);
                return fail_class(cls, t, cycle,
                                  "class " + std::to_string(cls) +
                                      " has a cycle in its underlying graph through " +
                                      std::to_string(t));
            }
            adj[t].push_back(h);
            adj[h].push_back(t);
        }
    }
    return {};
}

} // namespace arborize
