#include "arborize/density.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "arborize/branchings.hpp"
#include "arborize/flow.hpp"
#include "arborize/orient.hpp"

namespace arborize {

std::string to_string(DensityWitness::Kind kind) {
    return kind == DensityWitness::Kind::arboricity ? "arboricity" : "pseudoarboricity";
}

bool check_density_witness(const Multigraph& g, const DensityWitness& w) {
    if (w.S.empty()) return w.value == 0 && w.e_S == 0;
    std::set<Vertex> in_set(w.S.begin(), w.S.end());
    if (in_set.size() != w.S.size()) return false;
    for (Vertex v : w.S)
        if (v < 0 || v >= g.vertex_count()) return false;
    long long e = 0;
    for (const Edge& ed : g.edges())
        if (in_set.count(ed.u) && in_set.count(ed.v)) e += ed.mult;
    if (e != w.e_S) return false;
    long long denom;
    if (w.kind == DensityWitness::Kind::arboricity) {
        if (w.S.size() < 2) return false;
        denom = static_cast<long long>(w.S.size()) - 1;
    } else {
        denom = static_cast<long long>(w.S.size());
    }
    return (e + denom - 1) / denom == w.value;
}

namespace {

// Growing packing of edge copies into forests, with exchange-path insertion.
// Forests are adjacency lists of copy ids; shortest (BFS) exchange paths keep
// every forest acyclic across the swap cascade.
class ForestPacking {
public:
    ForestPacking(int n, std::vector<std::pair<Vertex, Vertex>> copies)
        : n_(n), copies_(std::move(copies)), forest_of_(copies_.size(), -1) {}

    int forest_count() const { return static_cast<int>(adj_.size()); }
    void add_forest() { adj_.emplace_back(n_); }
    int forest_of(int copy) const { return forest_of_[copy]; }

    // Attempts to place copy c without growing the packing. On failure fills
    // `witness` with the span of the blocking copies.
    bool insert(int c, std::vector<Vertex>& witness);

private:
    using Adjacency = std::vector<std::vector<std::pair<Vertex, int>>>;

    bool connected(int forest, Vertex a, Vertex b) const;
    std::vector<int> tree_path(int forest, Vertex a, Vertex b) const; // copy ids
    void attach(int forest, int copy);
    void detach(int forest, int copy);
    void assert_forest(int forest) const;

    int n_;
    std::vector<std::pair<Vertex, Vertex>> copies_;
    std::vector<int> forest_of_;
    std::vector<Adjacency> adj_;
};

bool ForestPacking::connected(int forest, Vertex a, Vertex b) const {
    if (a == b) return true;
    std::vector<char> seen(n_, 0);
    std::deque<Vertex> q{a};
    seen[a] = 1;
    while (!q.empty()) {
        Vertex x = q.front();
        q.pop_front();
        for (auto [y, copy] : adj_[forest][x]) {
            if (!seen[y]) {
                if (y == b) return true;
                seen[y] = 1;
                q.push_back(y);
            }
        }
    }
    return false;
}

std::vector<int> ForestPacking::tree_path(int forest, Vertex a, Vertex b) const {
    std::vector<int> prev_copy(n_, -1);
    std::vector<Vertex> prev_vertex(n_, -1);
    std::vector<char> seen(n_, 0);
    std::deque<Vertex> q{a};
    seen[a] = 1;
    while (!q.empty()) {
        Vertex x = q.front();
        q.pop_front();
        if (x == b) break;
        for (auto [y, copy] : adj_[forest][x]) {
            if (!seen[y]) {
                seen[y] = 1;
                prev_copy[y] = copy;
                prev_vertex[y] = x;
                q.push_back(y);
            }
        }
    }
    std::vector<int> path;
    for (Vertex x = b; x != a; x = prev_vertex[x]) path.push_back(prev_copy[x]);
    return path;
}

void ForestPacking::attach(int forest, int copy) {
    auto [u, v] = copies_[copy];
    adj_[forest][u].push_back({v, copy});
    adj_[forest][v].push_back({u, copy});
    forest_of_[copy] = forest;
}

void ForestPacking::detach(int forest, int copy) {
    auto [u, v] = copies_[copy];
    auto& au = adj_[forest][u];
    auto& av = adj_[forest][v];
    au.erase(std::find_if(au.begin(), au.end(), [&](auto p) { return p.second == copy; }));
    av.erase(std::find_if(av.begin(), av.end(), [&](auto p) { return p.second == copy; }));
    forest_of_[copy] = -1;
}

void ForestPacking::assert_forest(int forest) const {
    std::vector<int> root(n_);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    for (Vertex v = 0; v < n_; ++v)
        for (auto [w, copy] : adj_[forest][v])
            if (v < w) {
                int a = find(v), b = find(w);
                if (a == b) throw std::logic_error("forest packing invariant broken");
                root[a] = b;
            }
}

bool ForestPacking::insert(int c, std::vector<Vertex>& witness) {
    int k = forest_count();
    auto [cu, cv] = copies_[c];
    for (int f = 0; f < k; ++f) {
        if (!connected(f, cu, cv)) {
            attach(f, c);
            return true;
        }
    }
    // BFS over the exchange digraph: popping x, every copy on the tree path
    // between x's endpoints becomes reachable and could vacate its slot.
    std::vector<int> parent(copies_.size(), -1);
    std::vector<char> labeled(copies_.size(), 0);
    labeled[c] = 1;
    std::deque<int> queue{c};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        auto [xu, xv] = copies_[x];
        for (int f = 0; f < k; ++f) {
            if (f == forest_of_[x]) continue;
            if (!connected(f, xu, xv)) {
                // Unwind the swap cascade back to c.
                std::vector<int> touched;
                int cur = x, dest = f;
                while (cur != c) {
                    int home = forest_of_[cur];
                    detach(home, cur);
                    attach(dest, cur);
                    touched.push_back(dest);
                    cur = parent[cur];
                    dest = home;
                }
                attach(dest, c);
                touched.push_back(dest);
                for (int t : touched) assert_forest(t);
                return true;
            }
            for (int y : tree_path(f, xu, xv)) {
                if (!labeled[y]) {
                    labeled[y] = 1;
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
    }
    // Blocked: the labeled copies span a set where every forest is tight.
    std::vector<char> in_span(n_, 0);
    for (size_t y = 0; y < copies_.size(); ++y)
        if (labeled[y]) {
            in_span[copies_[y].first] = 1;
            in_span[copies_[y].second] = 1;
        }
    witness.clear();
    for (Vertex v = 0; v < n_; ++v)
        if (in_span[v]) witness.push_back(v);
    return false;
}

long long edges_inside(const Multigraph& g, const std::vector<Vertex>& s) {
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex v : s) in[v] = 1;
    long long e = 0;
    for (const Edge& ed : g.edges())
        if (in[ed.u] && in[ed.v]) e += ed.mult;
    return e;
}

} // namespace

ArboricityResult arboricity(const Multigraph& g) {
    ArboricityResult result;
    result.decomposition.kind = DecompKind::plain_forest;
    result.witness.kind = DensityWitness::Kind::arboricity;

    std::vector<std::pair<Vertex, Vertex>> copies;
    std::vector<int> copy_edge; // copy id -> edge index
    for (size_t i = 0; i < g.edges().size(); ++i)
        for (int c = 0; c < g.edges()[i].mult; ++c) {
            copies.push_back({g.edges()[i].u, g.edges()[i].v});
            copy_edge.push_back(static_cast<int>(i));
        }

    ForestPacking packing(g.vertex_count(), copies);
    std::vector<Vertex> last_witness;
    for (size_t c = 0; c < copies.size(); ++c) {
        std::vector<Vertex> witness;
        while (!packing.insert(static_cast<int>(c), witness)) {
            last_witness = witness;
            packing.add_forest();
        }
    }

    result.value = packing.forest_count();
    result.decomposition.k = result.value;
    result.decomposition.assignment.resize(g.edges().size());
    for (size_t c = 0; c < copies.size(); ++c)
        result.decomposition.assignment[copy_edge[c]].push_back(
            packing.forest_of(static_cast<int>(c)));

    if (result.value > 0) {
        result.witness.S = last_witness;
        result.witness.e_S = edges_inside(g, last_witness);
        result.witness.value = result.value;
        if (!check_density_witness(g, result.witness))
            throw std::logic_error("arboricity witness failed its recount");
    }
    return result;
}

PseudoarboricityResult pseudoarboricity(const Multigraph& g) {
    PseudoarboricityResult result;
    result.decomposition.kind = DecompKind::plain_pseudoforest;
    result.witness.kind = DensityWitness::Kind::pseudoarboricity;
    result.decomposition.assignment.resize(g.edges().size());
    if (g.total_multiplicity() == 0) return result;

    int max_deg = 0;
    for (int d : g.degrees()) max_deg = std::max(max_deg, d);
    int lo = 1, hi = std::max((max_deg + 1) / 2, 1);
    auto attempt = [&](int k) {
        return assign_copies_to_endpoints(g, std::vector<long long>(g.vertex_count(), k));
    };
    IncidenceAssignment best;
    while (lo < hi) {
        int mid = (lo + hi) / 2;
        IncidenceAssignment a = attempt(mid);
        if (a.feasible) {
            hi = mid;
            best = std::move(a);
        } else {
            lo = mid + 1;
        }
    }
    result.value = lo;
    if (!best.feasible) best = attempt(lo);
    if (!best.feasible) throw std::logic_error("pseudoarboricity search missed a feasible cap");

    // Each copy's tail is the endpoint it was assigned to; distinct colors for
    // each vertex's out-copies.
    std::vector<int> next_color(g.vertex_count(), 0);
    for (size_t i = 0; i < g.edges().size(); ++i) {
        const Edge& e = g.edges()[i];
        int out_of_u = best.at_u[i];
        for (int c = 0; c < out_of_u; ++c)
            result.decomposition.assignment[i].push_back(next_color[e.u]++);
        for (int c = 0; c < e.mult - out_of_u; ++c)
            result.decomposition.assignment[i].push_back(next_color[e.v]++);
    }
    result.decomposition.k = result.value;

    // Witness from the infeasible test one below the optimum.
    IncidenceAssignment blocked = attempt(result.value - 1);
    if (blocked.feasible || blocked.dense_set.empty())
        throw std::logic_error("pseudoarboricity witness extraction failed");
    result.witness.S = blocked.dense_set;
    result.witness.e_S = edges_inside(g, result.witness.S);
    long long s = static_cast<long long>(result.witness.S.size());
    result.witness.value = static_cast<int>((result.witness.e_S + s - 1) / s);
    if (!check_density_witness(g, result.witness) || result.witness.value != result.value)
        throw std::logic_error("pseudoarboricity witness failed its recount");
    return result;
}

DegreeBoundedPseudoResult degree_f_pseudoarboricity(const Multigraph& g, const DegreeFn& f) {
    if (f.min_allowed() < 2) throw input_error("degree-f pseudoarboricity requires f >= 2");
    DegreeBoundedPseudoResult result;
    result.decomposition.kind = DecompKind::degree_f_pseudoforest;
    result.decomposition.f = f;
    result.decomposition.assignment.resize(g.edges().size());
    if (g.total_multiplicity() == 0) return result;

    int k = std::max(delta_f(g, f), pseudoarboricity(g).value);
    result.value = k;
    result.decomposition.k = k;

    // Orient with outdegree <= k and indegree <= k (f(v) - 1); both caps are
    // admissible because delta_f <= k and pa <= k.
    std::map<Vertex, int> g_over, h_over;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        g_over[v] = k * (f(v) - 1);
        h_over[v] = k;
    }
    OrientationResult oriented =
        orient(g, DegreeFn(1, g_over, 0), DegreeFn(1, h_over, 0));
    if (!oriented.feasible())
        throw std::logic_error("degree-f pseudoarboricity orientation must exist");

    // Per class, each vertex keeps outdegree <= 1 and indegree <= f(v) - 1, so
    // classes are degree-f pseudoforests. Color the arcs through the tail/head
    // capped bipartite graph.
    const Digraph& d = *oriented.orientation;
    int n = g.vertex_count();
    Multigraph bip(2 * n);
    std::map<Vertex, int> caps;
    for (Vertex v = 0; v < n; ++v) {
        caps[v] = 1;
        caps[n + v] = std::max(1, f(v) - 1);
    }
    for (const Arc& a : d.arcs()) bip.add_edge(a.tail, n + a.head, a.mult);
    EdgeColoring coloring = hakimi_kariv_color(bip, DegreeFn(1, caps, 1));
    if (coloring.k != k)
        throw std::logic_error("degree-f pseudoforest coloring used " +
                               std::to_string(coloring.k) + " classes, expected " +
                               std::to_string(k));

    // Map bipartite edge copies back to undirected copies via the orientation.
    for (size_t i = 0; i < g.edges().size(); ++i) {
        const Edge& e = g.edges()[i];
        auto [u_to_v, v_to_u] = oriented.directions[i];
        int arc_uv = u_to_v > 0 ? d.find_arc(e.u, e.v) : -1;
        int arc_vu = v_to_u > 0 ? d.find_arc(e.v, e.u) : -1;
        std::vector<int>& target = result.decomposition.assignment[i];
        if (arc_uv >= 0) {
            int bip_edge = bip.find_edge(e.u, n + e.v);
            // Copies of (u->v) occupy a prefix of the bipartite entry only if
            // no anti-parallel arc shares it; tail/head pairs are distinct
            // bipartite pairs, so the entry is exactly this arc.
            for (int c = 0; c < u_to_v; ++c) target.push_back(coloring.colors[bip_edge][c]);
        }
        if (arc_vu >= 0) {
            int bip_edge = bip.find_edge(e.v, n + e.u);
            for (int c = 0; c < v_to_u; ++c) target.push_back(coloring.colors[bip_edge][c]);
        }
    }
    return result;
}

int degree_f_arboricity_upper(const Multigraph& g, const DegreeFn& f) {
    if (f.min_allowed() < 2) throw input_error("bound requires f >= 2");
    return std::max(delta_f(g, f) + 1, 2 * pseudoarboricity(g).value);
}

} // namespace arborize
