#include "ordtutte/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ordtutte/closed_form.hpp"
#include "ordtutte/recursion.hpp"

namespace ordtutte {

StateSum state_sum(const Multigraph& g, const EdgeOrdering& ordering, Backend backend) {
    return backend == Backend::recursive ? state_sum_recursive(g, ordering)
                                         : state_sum_closed(g, ordering);
}

void validate_fk_instance(const FkInstance& inst) {
    for (const Edge& e : inst.graph.edges()) {
        auto it = inst.p.find(e.id);
        if (it == inst.p.end())
            throw std::invalid_argument("missing p for edge " + std::to_string(e.id));
        if (it->second < 0 || it->second > 1)
            throw std::invalid_argument("p out of [0,1] for edge " + std::to_string(e.id));
    }
}

Rational fk_oracle(const FkInstance& inst) {
    validate_fk_instance(inst);
    const auto& edges = inst.graph.edges();
    const int n = static_cast<int>(edges.size());
    const int vertices = inst.graph.vertex_count();

    Rational total = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        // components of the selected subgraph, by label propagation
        std::vector<int> label(vertices);
        for (int v = 0; v < vertices; ++v) label[v] = v;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i < n; ++i) {
                if (!(mask >> i & 1)) continue;
                const int lu = label[edges[i].u];
                const int lv = label[edges[i].v];
                if (lu == lv) continue;
                const int lo = std::min(lu, lv);
                for (int v = 0; v < vertices; ++v)
                    if (label[v] == lu || label[v] == lv) label[v] = lo;
                changed = true;
            }
        }
        int components = 0;
        for (int v = 0; v < vertices; ++v)
            if (label[v] == v) ++components;

        Rational weight = 1;
        for (int i = 0; i < n; ++i) {
            const Rational& p = inst.p.at(edges[i].id);
            weight *= (mask >> i & 1) ? p : Rational{1} - p;
        }
        Rational q_power = 1;
        for (int c = 0; c < components; ++c) q_power *= inst.q;
        total += q_power * weight;
    }
    return total;
}

Rational fk_via_generalized(const FkInstance& inst, Backend backend) {
    validate_fk_instance(inst);
    const StateSum sum = state_sum(inst.graph, inst.graph.edge_ids(), backend);
    return sum.evaluate<Rational>(inst.q, 0, 0, inst.p, fk_weights<Rational>());
}

ChainInstance::ChainInstance(int n_, std::vector<double> lambdas_)
    : n(n_), lambdas(std::move(lambdas_)) {
    if (n < 1) throw std::invalid_argument("chain length must be positive");
    if (static_cast<int>(lambdas.size()) != n)
        throw std::invalid_argument("expected " + std::to_string(n) + " lambdas");
    for (double l : lambdas)
        if (l == 0.0)
            throw singular_argument("chain weights must be nonzero (alpha, beta singular at 0)");
}

Multigraph chain_graph(int n) {
    std::vector<Edge> edges;
    edges.reserve(n);
    for (int i = 1; i <= n; ++i) edges.push_back({i, i - 1, i});
    return Multigraph(n + 1, std::move(edges));
}

EdgeOrdering chain_ordering(int n) {
    EdgeOrdering order;
    order.reserve(n);
    for (int i = n; i >= 1; --i) order.push_back(i);
    return order;
}

StateSum chain_state_sum(int n, Backend backend) {
    return state_sum(chain_graph(n), chain_ordering(n), backend);
}

double s_n_via_generalized(const ChainInstance& inst, Backend backend) {
    const StateSum sum = chain_state_sum(inst.n, backend);
    std::map<int, double> lambdas;
    for (int i = 1; i <= inst.n; ++i) lambdas[i] = inst.lambdas[i - 1];
    // Deletion carries the memory: the shift multiplier is 1 on the deletion
    // branch and 0 on the contraction branch.
    return sum.evaluate<double>(1.0, 0.0, 1.0, lambdas, gbm_weights());
}

bool s_recurrence_check(const ChainInstance& inst, double tol) {
    const double lhs = s_n_via_generalized(inst);
    const int n = inst.n;
    const double last = inst.lambdas[n - 1];

    double s_plain = 1.0;
    double s_merged = 1.0;
    if (n > 1) {
        std::vector<double> head(inst.lambdas.begin(), inst.lambdas.end() - 1);
        s_plain = s_n_via_generalized(ChainInstance(n - 1, head));
        std::vector<double> merged = head;
        merged.back() += last;
        if (merged.back() == 0.0)
            throw singular_argument("merged weight lambda_" + std::to_string(n - 1) +
                                    " + lambda_" + std::to_string(n) + " vanishes");
        s_merged = s_n_via_generalized(ChainInstance(n - 1, merged));
    }
    const double rhs = std::exp(last) / last * s_plain - s_merged / last;
    return std::abs(lhs - rhs) <= tol * std::max(1.0, std::abs(lhs));
}

ConstantWeightReport constant_weight_specialization(const Multigraph& g,
                                                    const EdgeOrdering& ordering,
                                                    Backend backend) {
    ConstantWeightReport report;
    report.specialized = state_sum(g, ordering, backend).substituted(1, 1);

    for (const Term& term : report.specialized.terms()) {
        TermMultipliers tm{term.mask, term.q_exponent, {}};
        for (const Factor& f : term.factors) {
            std::int64_t multiplier = 0;
            for (const auto& [edge, poly] : f.arg.coeffs()) multiplier += poly.eval_int(1, 1);
            tm.factors.emplace_back(f.edge, f.kind, multiplier);
        }
        report.terms.push_back(std::move(tm));
    }

    report.alpha_collapse = true;
    for (const TermMultipliers& tm : report.terms) {
        for (const auto& [edge, kind, multiplier] : tm.factors) {
            if (kind != FactorKind::alpha) continue;
            auto [it, inserted] = report.collapsed_multiplier.emplace(edge, multiplier);
            if (!inserted && it->second != multiplier) report.alpha_collapse = false;
        }
    }
    if (!report.alpha_collapse) report.collapsed_multiplier.clear();
    return report;
}

std::pair<EdgeOrdering, EdgeOrdering> induced_orderings(const Multigraph& a,
                                                        const Multigraph& b,
                                                        const EdgeOrdering& ordering) {
    EdgeOrdering first, second;
    for (int id : ordering) {
        if (a.has_edge(id)) {
            first.push_back(id);
        } else if (b.has_edge(id)) {
            second.push_back(id);
        } else {
            throw std::invalid_argument("no such edge: " + std::to_string(id));
        }
    }
    validate_ordering(a, first);
    validate_ordering(b, second);
    return {std::move(first), std::move(second)};
}

}  // namespace ordtutte
