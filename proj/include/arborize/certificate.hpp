#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arborize/graph.hpp"

namespace arborize {

enum class DecompKind {
    degree_f_forest,
    degree_f_branching,
    degree_f_pseudoforest,
    plain_forest,
    plain_pseudoforest,
};

std::string to_string(DecompKind kind);
std::optional<DecompKind> decomp_kind_from_string(const std::string& s);

// Edge/arc coloring claiming a decomposition into k classes of the given kind.
// assignment[i] lists one class id per parallel copy of the i-th edge (arc) of
// the graph it certifies; directed kinds pair with a Digraph, the rest with a
// Multigraph.
struct DecompositionCertificate {
    DecompKind kind = DecompKind::plain_forest;
    int k = 0;
    std::vector<std::vector<int>> assignment;
    std::optional<DegreeFn> f; // absent for plain kinds

    bool requires_f() const {
        return kind == DecompKind::degree_f_forest || kind == DecompKind::degree_f_branching ||
               kind == DecompKind::degree_f_pseudoforest;
    }
};

struct Violation {
    enum class Type {
        coverage,   // assignment does not match the graph's edge multiset
        class_rule, // some class breaks its kind's definition
    };
    Type type = Type::class_rule;
    int class_index = -1;
    std::optional<Vertex> vertex;       // degree/indegree offender
    std::vector<Vertex> cycle;          // offending cycle or component, if any
    std::string message;
};

struct VerifyResult {
    bool ok = true;
    std::optional<Violation> violation;
    explicit operator bool() const { return ok; }
};

VerifyResult verify_certificate(const Multigraph& g, const DecompositionCertificate& cert);
VerifyResult verify_certificate(const Digraph& d, const DecompositionCertificate& cert);

} // namespace arborize
