#pragma once

#include <cstdint>
#include <vector>

namespace arborize {

// Integer max-flow (Dinic) with deterministic augmentation order: arcs are
// explored in insertion order. Supports per-arc lower bounds via the usual
// excess-node transformation.
class FlowNetwork {
public:
    explicit FlowNetwork(int node_count);

    int add_node();
    // Returns an arc id usable with flow_on(). Lower bounds must be resolved
    // through solve_with_lower_bounds().
    int add_arc(int from, int to, long long capacity, long long lower_bound = 0);

    // Max flow from s to t; callable once per network state (flows persist).
    long long max_flow(int s, int t);

    long long flow_on(int arc_id) const;

    // Nodes reachable from s in the residual network after max_flow;
    // the source side of a minimum cut.
    std::vector<bool> min_cut_source_side(int s) const;

    // Feasibility for the lower-bounded circulation obtained by adding a
    // t -> s arc of infinite capacity. On success, arc flows (including
    // lower bounds) are available via flow_on().
    bool solve_with_lower_bounds(int s, int t);

private:
    struct InternalArc {
        int to;
        long long cap;
        int rev; // index of reverse arc in adj_[to]
    };

    void add_internal(int from, int to, long long cap);
    bool bfs(int s, int t);
    long long dfs(int v, int t, long long limit);

    int n_;
    std::vector<std::vector<InternalArc>> adj_;
    std::vector<std::pair<int, int>> arc_ref_; // public arc id -> (node, index)
    std::vector<long long> arc_lower_;
    std::vector<int> level_, iter_;
};

} // namespace arborize
