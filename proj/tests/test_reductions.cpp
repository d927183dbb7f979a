#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "ordtutte/reductions.hpp"
#include "test_helpers.hpp"

using namespace ordtutte;
using namespace ordtutte::testing;

namespace {

double s1_formula(double l) { return (std::exp(l) - 1.0) / l; }

double s2_formula(double l1, double l2) {
    return std::exp(l2) / l2 * s1_formula(l1) - s1_formula(l1 + l2) / l2;
}

FkInstance random_instance(std::mt19937_64& rng, const Multigraph& g) {
    FkInstance inst{g, {}, Rational{}};
    for (int id : g.edge_ids()) inst.p[id] = random_probability(rng);
    const Rational qs[] = {Rational{2}, Rational{3}, Rational{1, 2}, Rational{7, 3}};
    inst.q = qs[rng() % 4];
    return inst;
}

}  // namespace

TEST_CASE("fk oracle on a single edge") {
    FkInstance inst{Multigraph(2, {{1, 0, 1}}), {{1, Rational{1, 3}}}, Rational{2}};
    CHECK(fk_oracle(inst) == Rational{10, 3});
}

TEST_CASE("fk oracle degenerate probabilities") {
    const Multigraph g = golden_graph();
    FkInstance zero{g, {}, Rational{3}};
    FkInstance one{g, {}, Rational{3}};
    for (int id : g.edge_ids()) {
        zero.p[id] = 0;
        one.p[id] = 1;
    }
    CHECK(fk_oracle(zero) == Rational{243});  // q^vertices = 3^5
    CHECK(fk_oracle(one) == Rational{9});     // q^k(G) = 3^2
}

TEST_CASE("fk instance validation") {
    FkInstance bad{Multigraph(2, {{1, 0, 1}}), {{1, Rational{3, 2}}}, Rational{2}};
    CHECK_THROWS_AS(fk_oracle(bad), std::invalid_argument);
    FkInstance missing{Multigraph(2, {{1, 0, 1}}), {}, Rational{2}};
    CHECK_THROWS_AS(fk_oracle(missing), std::invalid_argument);
}

TEST_CASE("generalized polynomial reproduces the oracle") {
    std::mt19937_64 rng(43);
    FkInstance tri{triangle(),
                   {{1, Rational{1, 2}}, {2, Rational{1, 2}}, {3, Rational{1, 2}}},
                   Rational{3}};
    const Rational expect = fk_oracle(tri);
    CHECK(fk_via_generalized(tri, Backend::recursive) == expect);
    CHECK(fk_via_generalized(tri, Backend::closed) == expect);

    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<int> ecount(1, 5);
        const Multigraph g = random_multigraph(rng, ecount(rng), 4);
        const FkInstance inst = random_instance(rng, g);
        const Rational oracle = fk_oracle(inst);
        CHECK(fk_via_generalized(inst, Backend::recursive) == oracle);
        CHECK(fk_via_generalized(inst, Backend::closed) == oracle);
    }
}

TEST_CASE("fk value is the same under every ordering") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 5; ++trial) {
        const Multigraph g = random_multigraph(rng, 4, 4);
        const FkInstance inst = random_instance(rng, g);
        const Rational expect = fk_oracle(inst);
        for (const EdgeOrdering& order : all_orderings(g)) {
            const StateSum s = state_sum(g, order, Backend::recursive);
            CHECK(s.evaluate<Rational>(inst.q, 0, 0, inst.p, fk_weights<Rational>()) ==
                  expect);
        }
    }
}

TEST_CASE("chain construction") {
    const Multigraph c3 = chain_graph(3);
    CHECK(c3.vertex_count() == 4);
    CHECK(c3.edge_count() == 3);
    CHECK(chain_ordering(3) == EdgeOrdering{3, 2, 1});
    CHECK_THROWS_AS(ChainInstance(2, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(ChainInstance(2, {1.0, 0.0}), singular_argument);
}

TEST_CASE("s_1 closed form") {
    for (double l : {0.3, 1.0, -0.8, 2.7}) {
        const double got = s_n_via_generalized(ChainInstance(1, {l}));
        CHECK(got == doctest::Approx(s1_formula(l)).epsilon(1e-12));
    }
    // dominant term for large arguments: s_1(l) ~ e^l / l
    const double l = 30.0;
    CHECK(s_n_via_generalized(ChainInstance(1, {l})) * l / std::exp(l) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("s_2 unrolled recurrence") {
    const double pairs[][2] = {{0.4, 0.9}, {1.1, -0.6}, {2.0, 0.35}};
    for (const auto& p : pairs) {
        const double got = s_n_via_generalized(ChainInstance(2, {p[0], p[1]}));
        CHECK(got == doctest::Approx(s2_formula(p[0], p[1])).epsilon(1e-12));
    }
}

TEST_CASE("both backends agree on the chain value") {
    const ChainInstance inst(4, {0.7, -1.3, 2.1, 0.4});
    CHECK(s_n_via_generalized(inst, Backend::recursive) ==
          doctest::Approx(s_n_via_generalized(inst, Backend::closed)).epsilon(1e-14));
}

TEST_CASE("s recurrence check") {
    CHECK(s_recurrence_check(ChainInstance(3, {0.7, -1.3, 2.1}), 1e-10));
    CHECK(s_recurrence_check(ChainInstance(1, {0.9}), 1e-12));
    CHECK_THROWS_AS(s_recurrence_check(ChainInstance(2, {1.5, -1.5}), 1e-10),
                    singular_argument);
}

TEST_CASE("constant weight specialization collapses the double edge") {
    const auto report =
        constant_weight_specialization(golden_double_edge_part(), {2, 4});
    CHECK(report.alpha_collapse);
    CHECK(report.collapsed_multiplier ==
          std::map<int, std::int64_t>{{2, 1}, {4, 2}});
    REQUIRE(report.terms.size() == 4);
    CHECK(report.terms[0].q_exponent == 2);  // empty subgraph
    CHECK(report.terms[3].q_exponent == 1);  // both edges
}

TEST_CASE("constant weight specialization collapses the triangle to 1,2,4") {
    const auto report =
        constant_weight_specialization(golden_triangle_part(), {1, 3, 5});
    CHECK(report.alpha_collapse);
    CHECK(report.collapsed_multiplier ==
          std::map<int, std::int64_t>{{1, 1}, {3, 2}, {5, 4}});
}

TEST_CASE("constant weight specialization on the path depends on the ordering") {
    // processed end to end the multipliers are 1,2,3 for every subgraph
    const auto in_order = constant_weight_specialization(path_graph(3), {1, 2, 3});
    CHECK(in_order.alpha_collapse);
    CHECK(in_order.collapsed_multiplier ==
          std::map<int, std::int64_t>{{1, 1}, {2, 2}, {3, 3}});

    // processing the middle edge first makes the outer edges adjacent only in
    // the contraction branch, so the multiplier of edge 3 depends on B
    const auto middle_first = constant_weight_specialization(path_graph(3), {2, 1, 3});
    CHECK(!middle_first.alpha_collapse);
    CHECK(middle_first.collapsed_multiplier.empty());
}

TEST_CASE("disjoint union factorizes with induced orderings") {
    const Multigraph g = golden_graph();
    const auto [sigma1, sigma2] =
        induced_orderings(golden_triangle_part(), golden_double_edge_part(), golden_ordering());
    const StateSum whole = state_sum(g, golden_ordering(), Backend::recursive);
    const StateSum product =
        tensor_product(state_sum(golden_triangle_part(), sigma1, Backend::recursive),
                       state_sum(golden_double_edge_part(), sigma2, Backend::recursive));
    CHECK(order_free_equal(whole, product));
}

TEST_CASE("one-point join does not factorize") {
    // two 2-edge paths sharing one vertex form a 4-edge path
    const Multigraph joined = path_graph(4);
    const Multigraph left(3, {{1, 0, 1}, {2, 1, 2}});
    const Multigraph right(3, {{3, 0, 1}, {4, 1, 2}});
    const EdgeOrdering order{1, 2, 3, 4};

    const StateSum whole = state_sum(joined, order, Backend::recursive);
    const StateSum product = tensor_product(state_sum(left, {1, 2}, Backend::recursive),
                                            state_sum(right, {3, 4}, Backend::recursive));

    // q-corrected for the glued vertex, the memory-free limit still matches...
    CHECK(order_free_terms_equal(whole.q_shifted(1).substituted(0, 0),
                                 product.substituted(0, 0)));
    // ...but the generic symbolic sums differ: the join makes edges 2 and 3
    // adjacent, which no split computation can see.
    CHECK(!order_free_terms_equal(whole.q_shifted(1), product));
}
