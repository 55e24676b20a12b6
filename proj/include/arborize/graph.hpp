#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "arborize/errors.hpp"

namespace arborize {

using Vertex = int;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    int mult = 1;
};

// Undirected loop-free multigraph. Parallel edges between the same pair are
// aggregated into a single entry with a multiplicity; individual copies are
// addressed as (edge index, copy index) with copy index in [0, mult).
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int n) : n_(n) {
        if (n < 0) throw input_error("vertex count must be nonnegative");
    }

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }

    // Aggregates into an existing (u,v) entry if present.
    void add_edge(Vertex u, Vertex v, int mult = 1);

    int total_multiplicity() const;
    int degree(Vertex v) const;
    std::vector<int> degrees() const;

    // Index into edges() for the unordered pair, or -1.
    int find_edge(Vertex u, Vertex v) const;

    bool is_simple() const;

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::map<std::pair<Vertex, Vertex>, int> index_; // minmax pair -> edge index
};

struct Arc {
    Vertex tail = 0;
    Vertex head = 0;
    int mult = 1;
};

// Directed loop-free multigraph. Parallel arcs (same tail and head) aggregate;
// anti-parallel arcs are distinct entries. A digraph is "simple" when every
// multiplicity is one.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n) : n_(n) {
        if (n < 0) throw input_error("vertex count must be nonnegative");
    }

    int vertex_count() const { return n_; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    void add_arc(Vertex tail, Vertex head, int mult = 1);

    int total_multiplicity() const;
    int out_degree(Vertex v) const;
    int in_degree(Vertex v) const;

    int find_arc(Vertex tail, Vertex head) const;

    bool is_simple() const;
    void require_simple(const char* context) const;

    Multigraph underlying() const;

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::vector<Arc> arcs_;
    std::map<std::pair<Vertex, Vertex>, int> index_;
};

// Vertex weight function with a context-dependent floor: 2 for forest bounds,
// 1 for bipartite coloring caps, 0 for orientation caps.
class DegreeFn {
public:
    DegreeFn() : DegreeFn(2, {}, 2) {}
    DegreeFn(int default_value, std::map<Vertex, int> overrides, int min_allowed);

    static DegreeFn constant(int value, int min_allowed = 2) {
        return DegreeFn(value, {}, min_allowed);
    }

    int operator()(Vertex v) const {
        auto it = overrides_.find(v);
        return it == overrides_.end() ? default_value_ : it->second;
    }

    int default_value() const { return default_value_; }
    const std::map<Vertex, int>& overrides() const { return overrides_; }
    int min_allowed() const { return min_allowed_; }

    int max_on(int n) const; // maximum value over vertices [0, n)

    // Same values, re-validated against a different floor.
    DegreeFn with_min_allowed(int min_allowed) const {
        return DegreeFn(default_value_, overrides_, min_allowed);
    }

private:
    int default_value_;
    std::map<Vertex, int> overrides_;
    int min_allowed_;
};

// max over v of ceil(d(v) / f(v)) with multiplicities; 0 on edgeless graphs.
int delta_f(const Multigraph& g, const DegreeFn& f);

struct DirectedDegreeStats {
    int max_in_degree = 0;               // Delta^-
    int max_out_degree_weighted = 0;     // max over v of ceil(d+(v) / (f(v)-1))
};
DirectedDegreeStats directed_degree_stats(const Digraph& d, const DegreeFn& f);

// Every multiplicity scaled by m.
Multigraph blowup(const Multigraph& g, int m);

struct SimpleProjection {
    Multigraph graph;                 // all multiplicities 1, same edge order
    std::vector<int> multiplicity;    // original multiplicity per edge index
};
SimpleProjection underlying_simple(const Multigraph& g);

// nullopt = acyclic. A multiplicity >= 2 gives girth 2.
std::optional<int> girth(const Multigraph& g);
// nullopt = no directed cycle. Anti-parallel arcs give directed girth 2.
std::optional<int> directed_girth(const Digraph& d);

} // namespace arborize
