#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arborize/certificate.hpp"
#include "arborize/graph.hpp"

namespace arborize {

// Per-copy color assignment for a multigraph's edges (or a digraph's arcs,
// through the index correspondence of an auxiliary bipartite graph).
struct EdgeColoring {
    int k = 0;
    std::vector<std::vector<int>> colors; // [edge index][copy index]
};

// Proper generalization of Konig edge coloring: colors the edges of a
// bipartite multigraph with exactly max_v ceil(d(v)/caps(v)) colors so that
// every vertex sees at most caps(v) edges of each color. Vertices are split
// into caps(v) clones, edges spread round-robin, and the clone graph is
// edge-colored with alternating-path recoloring.
EdgeColoring hakimi_kariv_color(const Multigraph& bipartite, const DegreeFn& caps);

// Tail copies land in X = [0, n), head copies in Y = [n, 2n); bipartite edge i
// corresponds to arc i. Caps: f(v) - 1 on tails, 1 on heads, so color classes
// of the coloring are directed degree-f pseudoforests.
struct AuxBipartite {
    Multigraph graph;
    DegreeFn caps;
    int base_n = 0;
};
AuxBipartite aux_bipartite(const Digraph& d, const DegreeFn& f);

// Classes of arc ids (requires a simple digraph): class i holds the arcs whose
// bipartite edge received color i; indegree <= 1 and outdegree <= f(v)-1 hold
// per class.
std::vector<std::vector<int>> pseudoforests_from_coloring(const Digraph& d, const DegreeFn& f,
                                                          const EdgeColoring& coloring);

struct MonochromaticCycle {
    int class_index = 0;
    std::vector<int> arcs;
};

// All directed cycles inside each class; within one class they are
// vertex-disjoint because indegrees are at most one.
std::vector<MonochromaticCycle> monochromatic_cycles(const Digraph& d,
                                                     const std::vector<std::vector<int>>& classes);

struct TransversalResult {
    bool found = false;
    std::vector<int> representative; // arc id per cycle, aligned with input
    bool precondition_ok = false;    // every |V_i| >= conflict degree + 2
    int min_class_size = 0;
    int required_size = 0;
    long long nodes_expanded = 0;
};

// One arc per cycle, pairwise non-adjacent in the underlying graph (an
// independent transversal in the line graph). Backtracking on classes ordered
// by fewest remaining candidates; exhaustive, so it always succeeds when the
// class-size precondition holds.
TransversalResult independent_transversal(const Digraph& d,
                                          const std::vector<MonochromaticCycle>& cycles);

struct PipelineStats {
    int d = 0;
    int classes = 0;
    int cycles = 0;
    std::optional<int> girth = std::nullopt; // only when computed here
    bool transversal_precondition = false;
    long long transversal_nodes = 0;
};

struct LargeGirthOptions {
    bool force = false;                          // run despite a failed girth check
    std::optional<int> girth_lower_bound;        // structural guarantee, skips the check
};

// Decomposition into exactly d + 1 degree-f branchings for a simple digraph of
// directed girth >= 4d, d = max{max indegree, weighted outdegree max}.
DecompositionCertificate decompose_large_girth(const Digraph& d, const DegreeFn& f,
                                               const LargeGirthOptions& opts = {},
                                               PipelineStats* stats = nullptr);

// At most 2d degree-f branchings: color into d directed degree-f pseudoforests
// and split each around its cycles.
DecompositionCertificate decompose_trivial(const Digraph& d, const DegreeFn& f);

struct VertexColoring {
    int k = 0;
    std::vector<int> color;
    // Recounted per (vertex, color): in-neighbors / out-neighbors of each color.
    std::vector<std::vector<int>> in_count;
    std::vector<std::vector<int>> out_count;
    long long resamplings = 0;
    bool hypothesis_warning = false; // k exceeds d^{9/10}
    double bound = 0;                // d/k + 3 sqrt(d ln d / k), floored at 1
};

// Random k-coloring of the vertices, resampled locally until every (v, i) has
// d^-(v, i) and d^+(v, i)/(f(v)-1) at most d/k + 3 sqrt(d ln d / k). The bound
// is floored at 1 so that tiny d stays satisfiable; counts never exceed d, so
// the floor is inert whenever the real bound clears 1.
VertexColoring lll_vertex_coloring(const Digraph& d, const DegreeFn& f, int k, uint64_t seed);

struct AsymptoticStats {
    int d = 0;
    int prime_k = 0;
    std::vector<int> residue_d;
    long long resamplings = 0;
    int pipeline_classes = -1; // -1 when the pipeline was not completed
    int trivial_classes = 0;
    bool used_fallback = false;
    std::string fallback_reason;
};

struct AsymptoticResult {
    DecompositionCertificate cert;
    AsymptoticStats stats;
};

// Residue-class decomposition: a random vertex coloring splits the arcs into k
// spanning subgraphs, all but one of which have directed girth >= k and get
// the large-girth pipeline; the remainder is decomposed trivially. Falls back
// to the trivial route when a runtime check fails or when the trivial route
// uses fewer classes.
AsymptoticResult decompose_asymptotic(const Digraph& d, const DegreeFn& f, uint64_t seed);

enum class DecomposeMode { girth, asymptotic, trivial };

struct UndirectedDecomposition {
    DecompositionCertificate cert; // degree-f-forest classes
    int d = 0;
    AsymptoticStats asymptotic_stats; // asymptotic mode only
    PipelineStats pipeline_stats;     // girth mode only
};

// Orient with capped in/out degrees, decompose the orientation into degree-f
// branchings, and forget directions.
UndirectedDecomposition decompose_undirected(const Multigraph& g, const DegreeFn& f,
                                             DecomposeMode mode, uint64_t seed = 0);

} // namespace arborize
