#include "arborize/flow.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace arborize {

namespace {
constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
}

FlowNetwork::FlowNetwork(int node_count) : n_(node_count), adj_(node_count) {}

int FlowNetwork::add_node() {
    adj_.emplace_back();
    return n_++;
}

void FlowNetwork::add_internal(int from, int to, long long cap) {
    adj_[from].push_back({to, cap, static_cast<int>(adj_[to].size())});
    adj_[to].push_back({from, 0, static_cast<int>(adj_[from].size()) - 1});
}

int FlowNetwork::add_arc(int from, int to, long long capacity, long long lower_bound) {
    if (lower_bound < 0 || capacity < lower_bound)
        throw std::logic_error("flow arc bounds must satisfy 0 <= lower <= capacity");
    arc_ref_.push_back({from, static_cast<int>(adj_[from].size())});
    arc_lower_.push_back(lower_bound);
    add_internal(from, to, capacity - lower_bound);
    return static_cast<int>(arc_ref_.size()) - 1;
}

bool FlowNetwork::bfs(int s, int t) {
    level_.assign(n_, -1);
    std::deque<int> q{s};
    level_[s] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (const InternalArc& a : adj_[v]) {
            if (a.cap > 0 && level_[a.to] == -1) {
                level_[a.to] = level_[v] + 1;
                q.push_back(a.to);
            }
        }
    }
    return level_[t] != -1;
}

long long FlowNetwork::dfs(int v, int t, long long limit) {
    if (v == t) return limit;
    for (int& i = iter_[v]; i < static_cast<int>(adj_[v].size()); ++i) {
        InternalArc& a = adj_[v][i];
        if (a.cap > 0 && level_[a.to] == level_[v] + 1) {
            long long got = dfs(a.to, t, std::min(limit, a.cap));
            if (got > 0) {
                a.cap -= got;
                adj_[a.to][a.rev].cap += got;
                return got;
            }
        }
    }
    return 0;
}

long long FlowNetwork::max_flow(int s, int t) {
    long long total = 0;
    while (bfs(s, t)) {
        iter_.assign(n_, 0);
        while (long long got = dfs(s, t, kInf)) total += got;
    }
    return total;
}

long long FlowNetwork::flow_on(int arc_id) const {
    auto [node, idx] = arc_ref_[arc_id];
    // Flow pushed equals capacity moved onto the reverse arc.
    const InternalArc& fwd = adj_[node][idx];
    return adj_[fwd.to][fwd.rev].cap + arc_lower_[arc_id];
}

std::vector<bool> FlowNetwork::min_cut_source_side(int s) const {
    std::vector<bool> side(n_, false);
    std::deque<int> q{s};
    side[s] = true;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (const InternalArc& a : adj_[v]) {
            if (a.cap > 0 && !side[a.to]) {
                side[a.to] = true;
                q.push_back(a.to);
            }
        }
    }
    return side;
}

bool FlowNetwork::solve_with_lower_bounds(int s, int t) {
    std::vector<long long> excess(n_ + 2, 0);
    for (size_t id = 0; id < arc_ref_.size(); ++id) {
        long long lb = arc_lower_[id];
        if (lb == 0) continue;
        auto [from, idx] = arc_ref_[id];
        excess[from] -= lb;
        excess[adj_[from][idx].to] += lb;
    }
    add_internal(t, s, kInf);
    int super_s = add_node();
    int super_t = add_node();
    long long need = 0;
    for (int v = 0; v < n_ - 2; ++v) {
        if (excess[v] > 0) {
            add_internal(super_s, v, excess[v]);
            need += excess[v];
        } else if (excess[v] < 0) {
            add_internal(v, super_t, -excess[v]);
        }
    }
    return max_flow(super_s, super_t) == need;
}

} // namespace arborize
