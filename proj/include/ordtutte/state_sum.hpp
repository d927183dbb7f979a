#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordtutte/linform.hpp"
#include "ordtutte/multigraph.hpp"
#include "ordtutte/weights.hpp"

namespace ordtutte {

enum class FactorKind { alpha, beta };

// One gamma_B(arg) factor: alpha(arg) if the edge was contracted, beta(arg)
// if it was deleted.
struct Factor {
    int edge;
    FactorKind kind;
    LinForm arg;
    friend bool operator==(const Factor&, const Factor&) = default;
};

struct Term {
    std::uint64_t mask;  // bit r set <=> r-th smallest edge id is in the subgraph
    int q_exponent;
    std::vector<Factor> factors;
    friend bool operator==(const Term&, const Term&) = default;
};

// The full spanning-subgraph expansion: one term per subgraph, each carrying
// q^k(B) and the ordered list of weight factors. Canonical equality of
// normalized sums is the project's definition of polynomial identity; alpha
// and beta stay opaque, so two factors are equal only if their argument
// linear forms are equal.
class StateSum {
public:
    StateSum() = default;
    StateSum(int vertex_count, std::vector<int> edge_ids, EdgeOrdering ordering,
             std::vector<Term> terms);

    int vertex_count() const { return vertex_count_; }
    int n() const { return static_cast<int>(edge_ids_.size()); }
    const std::vector<int>& edge_ids() const { return edge_ids_; }  // ascending
    const EdgeOrdering& ordering() const { return ordering_; }
    const std::vector<Term>& terms() const { return terms_; }

    std::uint64_t mask_from_ids(const EdgeIdSet& ids) const;
    EdgeIdSet ids_from_mask(std::uint64_t mask) const;
    bool mask_contains(std::uint64_t mask, int edge_id) const;
    int position_of(int edge_id) const;  // 1-based position in the ordering

    // Terms sorted by mask, factors sorted by processing position.
    // Idempotent; throws "malformed state sum" on duplicate masks.
    StateSum normalized() const;

    // Strict canonical equality (same ordering expected on both sides).
    friend bool operator==(const StateSum&, const StateSum&) = default;

    // Specialize eps and eps' to integers; the result is again a StateSum
    // whose linear-form coefficients are constants.
    StateSum substituted(std::int64_t eps_val, std::int64_t eps_prime_val) const;

    // Multiply every term by q^delta.
    StateSum q_shifted(int delta) const;

    template <class S>
    S evaluate(const S& q, const S& eps, const S& eps_prime, const std::map<int, S>& lambdas,
               const WeightModel<S>& w) const;

private:
    int vertex_count_ = 0;
    std::vector<int> edge_ids_;
    EdgeOrdering ordering_;
    std::vector<Term> terms_;
};

// Compare two sums with factors re-sorted by edge id and processing order
// ignored. This is the right notion for cross-ordering identities, where the
// same factor set is emitted in different sequences.
bool order_free_equal(const StateSum& a, const StateSum& b);

// Same comparison restricted to the term lists (masks, q exponents,
// factors); vertex counts may differ.
bool order_free_terms_equal(const StateSum& a, const StateSum& b);

// Product over a disjoint union: every term pair combines to one term with
// summed q exponents and concatenated factors. Edge id sets must be disjoint.
StateSum tensor_product(const StateSum& a, const StateSum& b);

template <class S>
S StateSum::evaluate(const S& q, const S& eps, const S& eps_prime,
                     const std::map<int, S>& lambdas, const WeightModel<S>& w) const {
    for (int id : edge_ids_)
        if (!lambdas.count(id))
            throw std::invalid_argument("missing lambda for edge " + std::to_string(id));
    // Fixed term order (ascending mask) keeps float rounding deterministic.
    const StateSum canon = normalized();
    S total{0};
    for (const Term& term : canon.terms()) {
        S prod{1};
        for (int i = 0; i < term.q_exponent; ++i) prod *= q;
        for (const Factor& f : term.factors) {
            const S x = f.arg.eval(eps, eps_prime, lambdas);
            S y;
            try {
                y = f.kind == FactorKind::alpha ? w.alpha(x) : w.beta(x);
            } catch (const singular_argument& err) {
                std::string ids;
                for (int id : canon.ids_from_mask(term.mask))
                    ids += (ids.empty() ? "" : ",") + std::to_string(id);
                throw singular_argument(std::string(err.what()) + " in term B={" + ids +
                                        "} at edge " + std::to_string(f.edge) +
                                        " with argument " + f.arg.str());
            }
            prod *= y;
        }
        total += prod;
    }
    return total;
}

}  // namespace ordtutte
