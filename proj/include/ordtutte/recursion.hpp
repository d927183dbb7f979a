#pragma once

#include <map>

#include "ordtutte/multigraph.hpp"
#include "ordtutte/state_sum.hpp"

namespace ordtutte {

enum class StepKind { contract, delete_ };

// In-flight state of one contraction-deletion branch: the reduced graph and
// the current (already shifted) weight of every surviving edge.
struct RecState {
    Multigraph graph;
    std::map<int, LinForm> weights;
};

// Imprint the processed edge's current weight on its line-graph neighbours:
// weight(f) += eps_kind * A(f, e) * weight(e), with eps for contraction and
// eps' for deletion, adjacency taken in the graph before e is removed. The
// entry for e itself is dropped; the graph is not modified here.
std::map<int, LinForm> shift_weights(const RecState& st, int e, StepKind kind);

// Backend A: execute the two-branch recursion over all 2^n leaves (one per
// spanning subgraph), recording an alpha factor with the current weight when
// an edge is contracted and a beta factor when it is deleted. Each leaf
// contributes q^(surviving vertex count). Output is normalized.
StateSum state_sum_recursive(const Multigraph& g, const EdgeOrdering& ordering);

}  // namespace ordtutte
