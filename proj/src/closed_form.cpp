#include "ordtutte/closed_form.hpp"

#include <algorithm>
#include <stdexcept>

namespace ordtutte {

AdjacencySequence::AdjacencySequence(const Multigraph& g, const EdgeOrdering& ordering,
                                     const EdgeIdSet& b)
    : n_(g.edge_count()), ordering_(ordering) {
    const auto graphs = reduced_sequence(g, ordering, b);
    in_b_.resize(n_);
    for (int k = 0; k < n_; ++k) in_b_[k] = b.count(ordering_[k]) > 0;

    adj_.assign(n_, std::vector<int>((n_ + 1) * (n_ + 1), 0));
    for (int level = 0; level < n_; ++level) {
        const Multigraph& reduced = graphs[level];
        for (int pm = level + 1; pm <= n_; ++pm) {
            for (int pn = pm + 1; pn <= n_; ++pn) {
                const int entry =
                    line_adjacency(reduced, ordering_[pm - 1], ordering_[pn - 1]);
                adj_[level][pm * (n_ + 1) + pn] = entry;
                adj_[level][pn * (n_ + 1) + pm] = entry;
            }
        }
    }
    final_components_ = graphs.back().component_count();
}

bool AdjacencySequence::position_in_b(int pos) const {
    if (pos < 1 || pos > n_) throw std::invalid_argument("position out of range");
    return in_b_[pos - 1];
}

int AdjacencySequence::edge_at(int pos) const {
    if (pos < 1 || pos > n_) throw std::invalid_argument("position out of range");
    return ordering_[pos - 1];
}

int AdjacencySequence::at_positions(int level, int pos_m, int pos_n) const {
    if (level < 0 || level >= n_) throw std::invalid_argument("adjacency level out of range");
    if (pos_m <= level || pos_n <= level || pos_m > n_ || pos_n > n_)
        throw std::invalid_argument("position not present at this level");
    if (pos_m == pos_n) throw std::invalid_argument("self-adjacency undefined");
    return adj_[level][pos_m * (n_ + 1) + pos_n];
}

int AdjacencySequence::at_edges(int level, int e, int f) const {
    auto pos = [&](int id) {
        auto it = std::find(ordering_.begin(), ordering_.end(), id);
        if (it == ordering_.end())
            throw std::invalid_argument("no such edge: " + std::to_string(id));
        return static_cast<int>(it - ordering_.begin()) + 1;
    };
    return at_positions(level, pos(e), pos(f));
}

Poly2 coefficient_C(const AdjacencySequence& adj, int k, int l) {
    if (l > k || l < 1 || k > adj.n())
        throw std::invalid_argument("coefficient_C needs 1 <= l <= k <= n");
    if (l == k) return Poly2::one();

    auto eps_of = [&](int pos) {
        return adj.position_in_b(pos) ? Poly2::eps() : Poly2::eps_prime();
    };

    // Chains l = c_0 < c_1 < ... < c_p < c_{p+1} = k over all subsets of the
    // intermediate positions; the link (c_i, c_{i+1}) reads A^(c_i - 1).
    const int between = k - l - 1;
    Poly2 total;
    for (std::uint64_t q_bits = 0; q_bits < (std::uint64_t{1} << between); ++q_bits) {
        std::vector<int> chain{l};
        for (int i = 0; i < between; ++i)
            if (q_bits >> i & 1) chain.push_back(l + 1 + i);
        chain.push_back(k);

        int product = 1;
        for (std::size_t i = 0; i + 1 < chain.size() && product; ++i)
            product = adj.at_positions(chain[i] - 1, chain[i + 1], chain[i]);
        if (!product) continue;

        Poly2 monomial = Poly2::one();
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) monomial *= eps_of(chain[i]);
        total += monomial;
    }
    return total;
}

LinForm hat_lambda(const AdjacencySequence& adj, int k) {
    if (k < 1 || k > adj.n()) throw std::invalid_argument("position out of range");
    LinForm form;
    for (int l = 1; l <= k; ++l)
        form.add_scaled(coefficient_C(adj, k, l), LinForm::unit(adj.edge_at(l)));
    return form;
}

StateSum state_sum_closed(const Multigraph& g, const EdgeOrdering& ordering) {
    validate_ordering(g, ordering);
    const int n = g.edge_count();
    if (n > 63) throw std::invalid_argument("too many edges for subgraph enumeration");

    StateSum result(g.vertex_count(), g.sorted_edge_ids(), ordering, {});
    std::vector<Term> terms;
    terms.reserve(std::size_t{1} << n);

    for (std::uint64_t position_mask = 0; position_mask < (std::uint64_t{1} << n);
         ++position_mask) {
        EdgeIdSet chosen;
        for (int k = 0; k < n; ++k)
            if (position_mask >> k & 1) chosen.insert(ordering[k]);

        const AdjacencySequence adj(g, ordering, chosen);
        Term term;
        term.mask = result.mask_from_ids(chosen);
        term.q_exponent = adj.final_component_count();
        term.factors.reserve(n);
        for (int k = 1; k <= n; ++k) {
            term.factors.push_back({ordering[k - 1],
                                    adj.position_in_b(k) ? FactorKind::alpha : FactorKind::beta,
                                    hat_lambda(adj, k)});
        }
        terms.push_back(std::move(term));
    }
    return StateSum(g.vertex_count(), g.sorted_edge_ids(), ordering, std::move(terms))
        .normalized();
}

bool lemma_ckl_check(const Multigraph& g, const EdgeOrdering& ordering, const EdgeIdSet& b,
                     int k) {
    if (k <= 1) throw std::invalid_argument("lemma_ckl_check needs k > 1");
    const AdjacencySequence adj(g, ordering, b);
    const Poly2 lhs = coefficient_C(adj, k, 1);
    const Poly2 eps1 = adj.position_in_b(1) ? Poly2::eps() : Poly2::eps_prime();
    Poly2 rhs;
    for (int l = 2; l <= k; ++l)
        rhs += Poly2::constant(adj.at_positions(0, l, 1)) * coefficient_C(adj, k, l);
    rhs *= eps1;
    return lhs == rhs;
}

}  // namespace ordtutte
