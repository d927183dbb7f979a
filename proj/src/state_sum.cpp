#include "ordtutte/state_sum.hpp"

#include <algorithm>

namespace ordtutte {

StateSum::StateSum(int vertex_count, std::vector<int> edge_ids, EdgeOrdering ordering,
                   std::vector<Term> terms)
    : vertex_count_(vertex_count),
      edge_ids_(std::move(edge_ids)),
      ordering_(std::move(ordering)),
      terms_(std::move(terms)) {
    if (!std::is_sorted(edge_ids_.begin(), edge_ids_.end()))
        throw std::invalid_argument("edge id list must be ascending");
    if (edge_ids_.size() > 64) throw std::invalid_argument("more than 64 edges unsupported");
    std::vector<int> check = ordering_;
    std::sort(check.begin(), check.end());
    if (check != edge_ids_)
        throw std::invalid_argument("ordering is not a permutation of the edge id list");
}

std::uint64_t StateSum::mask_from_ids(const EdgeIdSet& ids) const {
    std::uint64_t mask = 0;
    for (int id : ids) {
        auto it = std::lower_bound(edge_ids_.begin(), edge_ids_.end(), id);
        if (it == edge_ids_.end() || *it != id)
            throw std::invalid_argument("edge id " + std::to_string(id) + " not in state sum");
        mask |= std::uint64_t{1} << (it - edge_ids_.begin());
    }
    return mask;
}

EdgeIdSet StateSum::ids_from_mask(std::uint64_t mask) const {
    EdgeIdSet ids;
    for (std::size_t r = 0; r < edge_ids_.size(); ++r)
        if (mask >> r & 1) ids.insert(edge_ids_[r]);
    return ids;
}

bool StateSum::mask_contains(std::uint64_t mask, int edge_id) const {
    auto it = std::lower_bound(edge_ids_.begin(), edge_ids_.end(), edge_id);
    if (it == edge_ids_.end() || *it != edge_id)
        throw std::invalid_argument("edge id " + std::to_string(edge_id) + " not in state sum");
    return mask >> (it - edge_ids_.begin()) & 1;
}

int StateSum::position_of(int edge_id) const {
    for (std::size_t i = 0; i < ordering_.size(); ++i)
        if (ordering_[i] == edge_id) return static_cast<int>(i) + 1;
    throw std::invalid_argument("edge id " + std::to_string(edge_id) + " not in ordering");
}

StateSum StateSum::normalized() const {
    StateSum out = *this;
    std::map<int, int> position;
    for (std::size_t i = 0; i < ordering_.size(); ++i)
        position[ordering_[i]] = static_cast<int>(i);
    for (Term& term : out.terms_) {
        std::sort(term.factors.begin(), term.factors.end(),
                  [&](const Factor& a, const Factor& b) {
                      return position.at(a.edge) < position.at(b.edge);
                  });
    }
    std::sort(out.terms_.begin(), out.terms_.end(),
              [](const Term& a, const Term& b) { return a.mask < b.mask; });
    for (std::size_t i = 1; i < out.terms_.size(); ++i)
        if (out.terms_[i].mask == out.terms_[i - 1].mask)
            throw std::invalid_argument("malformed state sum: duplicate subgraph mask");
    return out;
}

StateSum StateSum::substituted(std::int64_t eps_val, std::int64_t eps_prime_val) const {
    StateSum out = *this;
    for (Term& term : out.terms_)
        for (Factor& f : term.factors) f.arg = f.arg.substituted(eps_val, eps_prime_val);
    return out;
}

StateSum StateSum::q_shifted(int delta) const {
    StateSum out = *this;
    for (Term& term : out.terms_) {
        term.q_exponent += delta;
        if (term.q_exponent < 0) throw std::invalid_argument("negative q exponent");
    }
    return out;
}

namespace {

std::vector<Term> edge_sorted_terms(const StateSum& s) {
    std::vector<Term> terms = s.normalized().terms();
    for (Term& term : terms)
        std::sort(term.factors.begin(), term.factors.end(),
                  [](const Factor& a, const Factor& b) { return a.edge < b.edge; });
    return terms;
}

}  // namespace

bool order_free_equal(const StateSum& a, const StateSum& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    return order_free_terms_equal(a, b);
}

bool order_free_terms_equal(const StateSum& a, const StateSum& b) {
    if (a.edge_ids() != b.edge_ids()) return false;
    return edge_sorted_terms(a) == edge_sorted_terms(b);
}

StateSum tensor_product(const StateSum& a, const StateSum& b) {
    std::vector<int> ids = a.edge_ids();
    for (int id : b.edge_ids()) {
        if (std::binary_search(a.edge_ids().begin(), a.edge_ids().end(), id))
            throw std::invalid_argument("tensor_product requires disjoint edge id sets");
        ids.push_back(id);
    }
    std::sort(ids.begin(), ids.end());

    EdgeOrdering ordering = a.ordering();
    ordering.insert(ordering.end(), b.ordering().begin(), b.ordering().end());

    StateSum out(a.vertex_count() + b.vertex_count(), std::move(ids), std::move(ordering), {});
    std::vector<Term> terms;
    terms.reserve(a.terms().size() * b.terms().size());
    for (const Term& ta : a.terms()) {
        for (const Term& tb : b.terms()) {
            EdgeIdSet union_ids = a.ids_from_mask(ta.mask);
            union_ids.merge(b.ids_from_mask(tb.mask));
            Term t;
            t.mask = out.mask_from_ids(union_ids);
            t.q_exponent = ta.q_exponent + tb.q_exponent;
            t.factors = ta.factors;
            t.factors.insert(t.factors.end(), tb.factors.begin(), tb.factors.end());
            terms.push_back(std::move(t));
        }
    }
    return StateSum(out.vertex_count(), out.edge_ids(), out.ordering(), std::move(terms))
        .normalized();
}

}  // namespace ordtutte
