#pragma once

#include <string>
#include <vector>

#include "arborize/certificate.hpp"
#include "arborize/graph.hpp"

namespace arborize {

// Dense-set witness certifying optimality of an integer density parameter:
// ceil(e_S / (|S|-1)) for arboricity, ceil(e_S / |S|) for pseudoarboricity.
// S is empty exactly when the parameter is 0.
struct DensityWitness {
    enum class Kind { arboricity, pseudoarboricity };
    Kind kind = Kind::arboricity;
    std::vector<Vertex> S;
    long long e_S = 0;
    int value = 0;
};

std::string to_string(DensityWitness::Kind kind);

// Recount e_S and the ceiling bound against the graph; true when the witness
// is internally consistent and certifies the claimed value.
bool check_density_witness(const Multigraph& g, const DensityWitness& w);

struct ArboricityResult {
    int value = 0;
    DecompositionCertificate decomposition; // plain-forest, k = value
    DensityWitness witness;
};

// Minimum number of forests partitioning the edge multiset, with an explicit
// partition and a Nash-Williams dense set proving optimality.
ArboricityResult arboricity(const Multigraph& g);

struct PseudoarboricityResult {
    int value = 0;
    DecompositionCertificate decomposition; // plain-pseudoforest, k = value
    DensityWitness witness;
};

// Hakimi bound, certified by a decomposition and a dense set.
PseudoarboricityResult pseudoarboricity(const Multigraph& g);

struct DegreeBoundedPseudoResult {
    int value = 0;
    DecompositionCertificate decomposition; // degree-f-pseudoforest, k = value
};

// max{delta_f, pa}, realized constructively by an orientation with capped
// out/indegrees followed by a degree-bounded bipartite coloring.
DegreeBoundedPseudoResult degree_f_pseudoarboricity(const Multigraph& g, const DegreeFn& f);

// max{delta_f + 1, 2 pa}: an upper bound on the degree-f arboricity obtained
// by splitting degree-2f pseudoforests.
int degree_f_arboricity_upper(const Multigraph& g, const DegreeFn& f);

} // namespace arborize
