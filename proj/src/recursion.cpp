#include "ordtutte/recursion.hpp"

namespace ordtutte {

std::map<int, LinForm> shift_weights(const RecState& st, int e, StepKind kind) {
    const auto it = st.weights.find(e);
    if (it == st.weights.end() || !st.graph.has_edge(e))
        throw std::invalid_argument("no such edge: " + std::to_string(e));
    const LinForm source = it->second;
    const Poly2 scale = kind == StepKind::contract ? Poly2::eps() : Poly2::eps_prime();

    std::map<int, LinForm> out = st.weights;
    out.erase(e);
    for (auto& [f, weight] : out)
        if (line_adjacency(st.graph, f, e)) weight.add_scaled(scale, source);
    return out;
}

StateSum state_sum_recursive(const Multigraph& g, const EdgeOrdering& ordering) {
    validate_ordering(g, ordering);
    const int n = g.edge_count();
    if (n > 63) throw std::invalid_argument("too many edges for subgraph enumeration");

    StateSum result(g.vertex_count(), g.sorted_edge_ids(), ordering, {});
    std::vector<Term> terms;
    terms.reserve(std::size_t{1} << n);

    // One pass per spanning subgraph: bit k of the mask decides whether the
    // edge at position k+1 is contracted. This walks exactly the leaves the
    // literal branch recursion would reach.
    for (std::uint64_t position_mask = 0; position_mask < (std::uint64_t{1} << n);
         ++position_mask) {
        RecState st{g, {}};
        for (int id : ordering) st.weights.emplace(id, LinForm::unit(id));

        Term term;
        term.factors.reserve(n);
        EdgeIdSet chosen;
        for (int k = 0; k < n; ++k) {
            const int e = ordering[k];
            const bool in_b = position_mask >> k & 1;
            term.factors.push_back(
                {e, in_b ? FactorKind::alpha : FactorKind::beta, st.weights.at(e)});
            st.weights = shift_weights(st, e, in_b ? StepKind::contract : StepKind::delete_);
            st.graph = in_b ? st.graph.contracted(e) : st.graph.deleted(e);
            if (in_b) chosen.insert(e);
        }
        term.mask = result.mask_from_ids(chosen);
        term.q_exponent = st.graph.vertex_count();
        terms.push_back(std::move(term));
    }
    return StateSum(g.vertex_count(), g.sorted_edge_ids(), ordering, std::move(terms))
        .normalized();
}

}  // namespace ordtutte
