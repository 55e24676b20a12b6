#include "arborize/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace arborize {

void Multigraph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw input_error("vertex id " + std::to_string(v) + " out of range [0, " +
                          std::to_string(n_) + ")");
}

void Multigraph::add_edge(Vertex u, Vertex v, int mult) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw input_error("loops are not allowed");
    if (mult < 1) throw input_error("edge multiplicity must be >= 1");
    auto key = std::minmax(u, v);
    auto it = index_.find(key);
    if (it != index_.end()) {
        edges_[it->second].mult += mult;
    } else {
        index_[key] = static_cast<int>(edges_.size());
        edges_.push_back({u, v, mult});
    }
}

int Multigraph::total_multiplicity() const {
    int total = 0;
    for (const Edge& e : edges_) total += e.mult;
    return total;
}

int Multigraph::degree(Vertex v) const {
    check_vertex(v);
    int d = 0;
    for (const Edge& e : edges_)
        if (e.u == v || e.v == v) d += e.mult;
    return d;
}

std::vector<int> Multigraph::degrees() const {
    std::vector<int> d(n_, 0);
    for (const Edge& e : edges_) {
        d[e.u] += e.mult;
        d[e.v] += e.mult;
    }
    return d;
}

int Multigraph::find_edge(Vertex u, Vertex v) const {
    auto it = index_.find(std::minmax(u, v));
    return it == index_.end() ? -1 : it->second;
}

bool Multigraph::is_simple() const {
    for (const Edge& e : edges_)
        if (e.mult > 1) return false;
    return true;
}

void Digraph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw input_error("vertex id " + std::to_string(v) + " out of range [0, " +
                          std::to_string(n_) + ")");
}

void Digraph::add_arc(Vertex tail, Vertex head, int mult) {
    check_vertex(tail);
    check_vertex(head);
    if (tail == head) throw input_error("loops are not allowed");
    if (mult < 1) throw input_error("arc multiplicity must be >= 1");
    auto key = std::make_pair(tail, head);
    auto it = index_.find(key);
    if (it != index_.end()) {
        arcs_[it->second].mult += mult;
    } else {
        index_[key] = static_cast<int>(arcs_.size());
        arcs_.push_back({tail, head, mult});
    }
}

int Digraph::total_multiplicity() const {
    int total = 0;
    for (const Arc& a : arcs_) total += a.mult;
    return total;
}

int Digraph::out_degree(Vertex v) const {
    check_vertex(v);
    int d = 0;
    for (const Arc& a : arcs_)
        if (a.tail == v) d += a.mult;
    return d;
}

int Digraph::in_degree(Vertex v) const {
    check_vertex(v);
    int d = 0;
    for (const Arc& a : arcs_)
        if (a.head == v) d += a.mult;
    return d;
}

int Digraph::find_arc(Vertex tail, Vertex head) const {
    auto it = index_.find(std::make_pair(tail, head));
    return it == index_.end() ? -1 : it->second;
}

bool Digraph::is_simple() const {
    for (const Arc& a : arcs_)
        if (a.mult > 1) return false;
    return true;
}

void Digraph::require_simple(const char* context) const {
    if (!is_simple())
        throw input_error(std::string(context) + " requires a digraph without parallel arcs");
}

Multigraph Digraph::underlying() const {
    Multigraph g(n_);
    for (const Arc& a : arcs_) g.add_edge(a.tail, a.head, a.mult);
    return g;
}

DegreeFn::DegreeFn(int default_value, std::map<Vertex, int> overrides, int min_allowed)
    : default_value_(default_value), overrides_(std::move(overrides)), min_allowed_(min_allowed) {
    if (default_value_ < min_allowed_)
        throw input_error("degree function default " + std::to_string(default_value_) +
                          " below floor " + std::to_string(min_allowed_));
    for (const auto& [v, val] : overrides_)
        if (val < min_allowed_)
            throw input_error("degree function value " + std::to_string(val) + " at vertex " +
                              std::to_string(v) + " below floor " + std::to_string(min_allowed_));
}

int DegreeFn::max_on(int n) const {
    int best = default_value_;
    for (const auto& [v, val] : overrides_)
        if (v >= 0 && v < n) best = std::max(best, val);
    return best;
}

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

} // namespace

int delta_f(const Multigraph& g, const DegreeFn& f) {
    if (f.min_allowed() < 1)
        throw input_error("delta_f requires f >= 1 pointwise");
    int best = 0;
    std::vector<int> deg = g.degrees();
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (deg[v] > 0) best = std::max(best, ceil_div(deg[v], f(v)));
    return best;
}

DirectedDegreeStats directed_degree_stats(const Digraph& d, const DegreeFn& f) {
    if (f.min_allowed() < 2)
        throw input_error("directed degree stats require f >= 2 pointwise");
    DirectedDegreeStats stats;
    std::vector<int> in(d.vertex_count(), 0), out(d.vertex_count(), 0);
    for (const Arc& a : d.arcs()) {
        out[a.tail] += a.mult;
        in[a.head] += a.mult;
    }
    for (Vertex v = 0; v < d.vertex_count(); ++v) {
        stats.max_in_degree = std::max(stats.max_in_degree, in[v]);
        if (out[v] > 0)
            stats.max_out_degree_weighted =
                std::max(stats.max_out_degree_weighted, ceil_div(out[v], f(v) - 1));
    }
    return stats;
}

Multigraph blowup(const Multigraph& g, int m) {
    if (m < 1) throw input_error("blowup factor must be >= 1");
    Multigraph out(g.vertex_count());
    for (const Edge& e : g.edges()) out.add_edge(e.u, e.v, e.mult * m);
    return out;
}

SimpleProjection underlying_simple(const Multigraph& g) {
    SimpleProjection p;
    p.graph = Multigraph(g.vertex_count());
    p.multiplicity.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
        p.graph.add_edge(e.u, e.v, 1);
        p.multiplicity.push_back(e.mult);
    }
    return p;
}

std::optional<int> girth(const Multigraph& g) {
    for (const Edge& e : g.edges())
        if (e.mult >= 2) return 2;
    // Simple case: BFS from every vertex; a non-tree edge at depths a, b closes
    // a cycle of length a + b + 1 through the root (standard girth bound; the
    // minimum over all roots is exact).
    int n = g.vertex_count();
    std::vector<std::vector<Vertex>> adj(n);
    for (const Edge& e : g.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(n), parent(n);
    for (Vertex root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<Vertex> q{root};
        dist[root] = 0;
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop_front();
            for (Vertex y : adj[x]) {
                if (dist[y] == -1) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    q.push_back(y);
                }
            }
        }
        // Every non-tree edge closes a cycle of length <= dist[u] + dist[v] + 1.
        for (const Edge& e : g.edges()) {
            if (dist[e.u] == -1 || dist[e.v] == -1) continue;
            if (parent[e.u] == e.v || parent[e.v] == e.u) continue;
            best = std::min(best, dist[e.u] + dist[e.v] + 1);
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

std::optional<int> directed_girth(const Digraph& d) {
    int n = d.vertex_count();
    std::vector<std::vector<Vertex>> adj(n);
    for (const Arc& a : d.arcs()) adj[a.tail].push_back(a.head);
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(n);
    for (Vertex root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<Vertex> q{root};
        dist[root] = 0;
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop_front();
            for (Vertex y : adj[x]) {
                if (y == root) {
                    best = std::min(best, dist[x] + 1);
                } else if (dist[y] == -1) {
                    dist[y] = dist[x] + 1;
                    q.push_back(y);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

} // namespace arborize
