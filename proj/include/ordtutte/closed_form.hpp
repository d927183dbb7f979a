#pragma once

#include <vector>

#include "ordtutte/multigraph.hpp"
#include "ordtutte/state_sum.hpp"

namespace ordtutte {

// The reduced line-graph adjacency sequence A^(0), ..., A^(n-1) for one
// spanning subgraph b: A^(k) is the 0/1 adjacency of the graph obtained by
// processing the first k positions of the ordering (contract if in b, delete
// otherwise). A^(k) is defined on pairs of positions > k.
class AdjacencySequence {
public:
    AdjacencySequence(const Multigraph& g, const EdgeOrdering& ordering, const EdgeIdSet& b);

    int n() const { return n_; }
    const EdgeOrdering& ordering() const { return ordering_; }
    bool position_in_b(int pos) const;          // 1-based position
    int edge_at(int pos) const;                 // original edge id
    int final_component_count() const { return final_components_; }

    // A^(level) entry for two 1-based positions, both > level.
    int at_positions(int level, int pos_m, int pos_n) const;
    // Same entry addressed by original edge ids.
    int at_edges(int level, int e, int f) const;

private:
    int n_ = 0;
    EdgeOrdering ordering_;
    std::vector<bool> in_b_;                 // by position (0-based)
    std::vector<std::vector<int>> adj_;      // adj_[level][pm * (n+1) + pn]
    int final_components_ = 0;
};

// Adjacency-chain coefficient C_{k,l;B} as an exact polynomial in eps, eps'
// (positions 1-based, l <= k): 1 on the diagonal, otherwise the sum over
// subsets Q of the positions strictly between l and k of the adjacency chain
// l -> Q (ascending) -> k, each link weighted by the matrix one level below
// its lower endpoint and each chain node below k contributing eps or eps'
// according to membership in B.
Poly2 coefficient_C(const AdjacencySequence& adj, int k, int l);

// Shifted weight of the k-th processed edge: sum_{l<=k} C_{k,l;B} lambda_{sigma(l)}.
LinForm hat_lambda(const AdjacencySequence& adj, int k);

// Backend B: assemble the spanning-subgraph expansion directly from the
// coefficient formulas, independently of any recursion. Output is normalized.
StateSum state_sum_closed(const Multigraph& g, const EdgeOrdering& ordering);

// Exact identity C_{k,1;B} = eps^1_B * sum_{l>1..k} A^(0)_{l,1} C_{k,l;B}.
bool lemma_ckl_check(const Multigraph& g, const EdgeOrdering& ordering, const EdgeIdSet& b,
                     int k);

}  // namespace ordtutte
