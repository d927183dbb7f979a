#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "ordtutte/recursion.hpp"
#include "test_helpers.hpp"

using namespace ordtutte;
using namespace ordtutte::testing;

namespace {

// Test-only oracle: the literal two-branch tree recursion, with its own
// endpoint-sharing test instead of line_adjacency. Collects the same leaf
// data the mask iteration is defined to produce.
void expand_tree(const Multigraph& g, const EdgeOrdering& order, std::size_t depth,
                 std::map<int, LinForm> weights, std::vector<Factor> factors,
                 EdgeIdSet chosen, std::vector<Term>* leaves, const StateSum& codec) {
    if (depth == order.size()) {
        leaves->push_back(
            {codec.mask_from_ids(chosen), g.vertex_count(), std::move(factors)});
        return;
    }
    const int id = order[depth];
    const Edge cur = g.edge(id);
    for (const bool take : {false, true}) {
        std::map<int, LinForm> w = weights;
        std::vector<Factor> fs = factors;
        EdgeIdSet b = chosen;
        fs.push_back({id, take ? FactorKind::alpha : FactorKind::beta, w.at(id)});
        const LinForm source = w.at(id);
        w.erase(id);
        for (auto& [other, weight] : w) {
            const Edge e = g.edge(other);
            const bool shares =
                e.u == cur.u || e.u == cur.v || e.v == cur.u || e.v == cur.v;
            if (shares)
                weight.add_scaled(take ? Poly2::eps() : Poly2::eps_prime(), source);
        }
        if (take) b.insert(id);
        expand_tree(take ? g.contracted(id) : g.deleted(id), order, depth + 1, std::move(w),
                    std::move(fs), std::move(b), leaves, codec);
    }
}

StateSum tree_recursion_oracle(const Multigraph& g, const EdgeOrdering& order) {
    StateSum codec(g.vertex_count(), g.sorted_edge_ids(), order, {});
    std::vector<Term> leaves;
    std::map<int, LinForm> weights;
    for (int id : order) weights.emplace(id, LinForm::unit(id));
    expand_tree(g, order, 0, std::move(weights), {}, {}, &leaves, codec);
    return StateSum(g.vertex_count(), g.sorted_edge_ids(), order, std::move(leaves))
        .normalized();
}

LinForm lf(std::initializer_list<std::pair<int, Poly2>> parts) {
    LinForm f;
    for (const auto& [edge, poly] : parts) f.add_scaled(poly, LinForm::unit(edge));
    return f;
}

}  // namespace

TEST_CASE("single edge expansion") {
    const Multigraph g(2, {{1, 0, 1}});
    const StateSum s = state_sum_recursive(g, {1});
    REQUIRE(s.terms().size() == 2);
    const Term& empty = s.terms()[0];
    const Term& full = s.terms()[1];
    CHECK(empty.q_exponent == 2);
    CHECK(empty.factors == std::vector<Factor>{{1, FactorKind::beta, LinForm::unit(1)}});
    CHECK(full.q_exponent == 1);
    CHECK(full.factors == std::vector<Factor>{{1, FactorKind::alpha, LinForm::unit(1)}});
}

TEST_CASE("shift weights on the triangle") {
    const Multigraph t = golden_triangle_part();
    RecState st{t, {{1, LinForm::unit(1)}, {3, LinForm::unit(3)}, {5, LinForm::unit(5)}}};

    const auto contracted = shift_weights(st, 1, StepKind::contract);
    CHECK(contracted.at(3) == lf({{3, Poly2::one()}, {1, Poly2::eps()}}));
    CHECK(contracted.at(5) == lf({{5, Poly2::one()}, {1, Poly2::eps()}}));
    CHECK(contracted.count(1) == 0);

    const auto deleted = shift_weights(st, 1, StepKind::delete_);
    CHECK(deleted.at(3) == lf({{3, Poly2::one()}, {1, Poly2::eps_prime()}}));

    CHECK_THROWS_AS(shift_weights(st, 9, StepKind::contract), std::invalid_argument);
}

TEST_CASE("non-adjacent weights stay put") {
    const Multigraph g = golden_graph();
    RecState st{g, {}};
    for (int id : g.edge_ids()) st.weights.emplace(id, LinForm::unit(id));
    const auto shifted = shift_weights(st, 1, StepKind::contract);
    CHECK(shifted.at(2) == LinForm::unit(2));
    CHECK(shifted.at(4) == LinForm::unit(4));
}

TEST_CASE("five-edge example: frozen full and empty terms") {
    const StateSum s = state_sum_recursive(golden_graph(), golden_ordering());
    REQUIRE(s.terms().size() == 32);

    const Poly2 e = Poly2::eps();
    const Poly2 ep = Poly2::eps_prime();

    const Term& full = s.terms().back();
    CHECK(full.mask == 31);
    CHECK(full.q_exponent == 2);
    CHECK(full.factors ==
          std::vector<Factor>{
              {1, FactorKind::alpha, LinForm::unit(1)},
              {2, FactorKind::alpha, LinForm::unit(2)},
              {3, FactorKind::alpha, lf({{3, Poly2::one()}, {1, e}})},
              {4, FactorKind::alpha, lf({{4, Poly2::one()}, {2, e}})},
              {5, FactorKind::alpha, lf({{5, Poly2::one()}, {3, e}, {1, e + e * e}})}});

    const Term& empty = s.terms().front();
    CHECK(empty.mask == 0);
    CHECK(empty.q_exponent == 5);
    CHECK(empty.factors ==
          std::vector<Factor>{
              {1, FactorKind::beta, LinForm::unit(1)},
              {2, FactorKind::beta, LinForm::unit(2)},
              {3, FactorKind::beta, lf({{3, Poly2::one()}, {1, ep}})},
              {4, FactorKind::beta, lf({{4, Poly2::one()}, {2, ep}})},
              {5, FactorKind::beta, lf({{5, Poly2::one()}, {3, ep}, {1, ep + ep * ep}})}});
}

TEST_CASE("mixed branch keeps the deletion parameter in later shifts") {
    // delete e1, contract the rest: alpha(l3 + eps' l1) appears, and e5
    // accumulates eps l3 + eps'(1 + eps) l1.
    const StateSum s = state_sum_recursive(golden_graph(), golden_ordering());
    const std::uint64_t mask = s.mask_from_ids({2, 3, 4, 5});
    const Term* term = nullptr;
    for (const Term& t : s.terms())
        if (t.mask == mask) term = &t;
    REQUIRE(term != nullptr);
    const Poly2 e = Poly2::eps();
    const Poly2 ep = Poly2::eps_prime();
    CHECK(term->factors[0] == Factor{1, FactorKind::beta, LinForm::unit(1)});
    CHECK(term->factors[2] ==
          Factor{3, FactorKind::alpha, lf({{3, Poly2::one()}, {1, ep}})});
    CHECK(term->factors[4] ==
          Factor{5, FactorKind::alpha, lf({{5, Poly2::one()}, {3, e}, {1, ep + ep * e}})});
}

TEST_CASE("eps = eps' = 0 wipes all shifts") {
    const StateSum s =
        state_sum_recursive(golden_graph(), golden_ordering()).substituted(0, 0);
    for (const Term& t : s.terms())
        for (const Factor& f : t.factors) CHECK(f.arg == LinForm::unit(f.edge));
}

TEST_CASE("leaves are one per subgraph with matching component count") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> ecount(1, 5);
        const Multigraph g = random_multigraph(rng, ecount(rng), 4);
        const EdgeOrdering order = random_ordering(rng, g);
        const StateSum s = state_sum_recursive(g, order);
        REQUIRE(s.terms().size() == std::size_t{1} << g.edge_count());
        for (std::size_t i = 0; i < s.terms().size(); ++i) {
            CHECK(s.terms()[i].mask == i);  // distinct and complete
            CHECK(s.terms()[i].q_exponent ==
                  spanning_component_count(g, s.ids_from_mask(s.terms()[i].mask)));
            CHECK(s.terms()[i].factors.size() == static_cast<std::size_t>(g.edge_count()));
        }
    }
}

TEST_CASE("mask iteration equals the literal tree recursion") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<int> ecount(1, 4);
        const Multigraph g = random_multigraph(rng, ecount(rng), 4);
        const EdgeOrdering order = random_ordering(rng, g);
        CHECK(state_sum_recursive(g, order) == tree_recursion_oracle(g, order));
    }
    CHECK(state_sum_recursive(golden_graph(), golden_ordering()) ==
          tree_recursion_oracle(golden_graph(), golden_ordering()));
}

TEST_CASE("ordering dependence witness on the triangle") {
    const Multigraph t = triangle();
    const StateSum a = state_sum_recursive(t, {1, 2, 3});
    const StateSum b = state_sum_recursive(t, {2, 1, 3});
    CHECK(!order_free_equal(a, b));                              // generic eps differs
    CHECK(order_free_equal(a.substituted(0, 0), b.substituted(0, 0)));  // memory-free limit
}

TEST_CASE("ordering mismatch is rejected") {
    CHECK_THROWS_AS(state_sum_recursive(triangle(), {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(state_sum_recursive(triangle(), {1, 2, 2}), std::invalid_argument);
}
