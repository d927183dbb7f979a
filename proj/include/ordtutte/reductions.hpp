#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "ordtutte/multigraph.hpp"
#include "ordtutte/state_sum.hpp"

namespace ordtutte {

enum class Backend { recursive, closed };

StateSum state_sum(const Multigraph& g, const EdgeOrdering& ordering, Backend backend);

// ---------------------------------------------------------------------------
// Random-cluster limit

struct FkInstance {
    Multigraph graph;
    std::map<int, Rational> p;  // edge id -> probability in [0, 1]
    Rational q;
};

void validate_fk_instance(const FkInstance& inst);

// Direct enumeration of sum_A q^k(A) prod_{e in A} p_e prod_{e notin A}
// (1 - p_e) with its own component counting; shares no code with either
// state-sum backend so it can arbitrate between them.
Rational fk_oracle(const FkInstance& inst);

// The same value through the generalized polynomial at eps = eps' = 0 with
// alpha(x) = x, beta(x) = 1 - x, lambda_e = p_e.
Rational fk_via_generalized(const FkInstance& inst, Backend backend);

// ---------------------------------------------------------------------------
// Integrated-GBM moment functions on the chain graph

struct ChainInstance {
    int n;
    std::vector<double> lambdas;  // all nonzero; lambdas[i] belongs to chain edge i+1

    ChainInstance(int n_, std::vector<double> lambdas_);
};

// Chain with edges i = (i-1, i) for i = 1..n.
Multigraph chain_graph(int n);

// The chain recursion peels the far-end edge first: (e_n, e_{n-1}, ..., e_1).
EdgeOrdering chain_ordering(int n);

// The symbolic expansion for C_n under the chain ordering; lambda-independent,
// so callers evaluate it at as many weight vectors as they like.
StateSum chain_state_sum(int n, Backend backend = Backend::recursive);

// s_n = the chain state sum evaluated at q = 1 with alpha(x) = e^x/x,
// beta(x) = -1/x, where the deletion branch carries the unit memory shift and
// the contraction branch carries none. Throws singular_argument if any factor
// argument evaluates to 0.
double s_n_via_generalized(const ChainInstance& inst, Backend backend = Backend::recursive);

// Checks s_n = (e^{l_n}/l_n) s_{n-1}(l_1..l_{n-1}) - (1/l_n) s_{n-1}(l_1, ...,
// l_{n-1}+l_n), both sides through the engine, to |lhs-rhs| <= tol*max(1,|lhs|).
bool s_recurrence_check(const ChainInstance& inst, double tol);

// ---------------------------------------------------------------------------
// Constant-weight specialization (eps = eps' = 1, all lambda_j = lambda)

struct TermMultipliers {
    std::uint64_t mask;
    int q_exponent;
    // per factor in processing order: edge id, kind, integer c with
    // argument = c * lambda
    std::vector<std::tuple<int, FactorKind, std::int64_t>> factors;
    friend bool operator==(const TermMultipliers&, const TermMultipliers&) = default;
};

struct ConstantWeightReport {
    StateSum specialized;  // the eps = eps' = 1 substituted sum
    std::vector<TermMultipliers> terms;
    // True when, for every edge, the alpha-factor multiplier is the same in
    // every subgraph containing the edge; the sum then collapses to a
    // multivariate Tutte polynomial in the rescaled weights (beta = 1).
    bool alpha_collapse = false;
    std::map<int, std::int64_t> collapsed_multiplier;  // filled when alpha_collapse
};

ConstantWeightReport constant_weight_specialization(const Multigraph& g,
                                                    const EdgeOrdering& ordering,
                                                    Backend backend = Backend::recursive);

// ---------------------------------------------------------------------------
// Disjoint-union factorization helpers

// Splits an ordering of disjoint_union(a, b) into the two orderings induced
// by order of appearance.
std::pair<EdgeOrdering, EdgeOrdering> induced_orderings(const Multigraph& a,
                                                        const Multigraph& b,
                                                        const EdgeOrdering& ordering);

}  // namespace ordtutte
