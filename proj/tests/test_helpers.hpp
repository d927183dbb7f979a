#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "ordtutte/multigraph.hpp"
#include "ordtutte/weights.hpp"

namespace ordtutte::testing {

// Triangle {e1,e3,e5} next to a double edge {e2,e4}: the worked five-edge
// example both backends must reproduce term by term.
inline Multigraph golden_graph() {
    return Multigraph(5, {{1, 0, 1}, {2, 3, 4}, {3, 1, 2}, {4, 3, 4}, {5, 2, 0}});
}

inline EdgeOrdering golden_ordering() { return {1, 2, 3, 4, 5}; }

inline Multigraph golden_triangle_part() {
    return Multigraph(3, {{1, 0, 1}, {3, 1, 2}, {5, 2, 0}});
}

inline Multigraph golden_double_edge_part() {
    return Multigraph(2, {{2, 0, 1}, {4, 0, 1}});
}

inline Multigraph triangle() {
    return Multigraph(3, {{1, 0, 1}, {2, 1, 2}, {3, 2, 0}});
}

inline Multigraph path_graph(int edges) {
    std::vector<Edge> list;
    for (int i = 1; i <= edges; ++i) list.push_back({i, i - 1, i});
    return Multigraph(edges + 1, std::move(list));
}

inline std::vector<EdgeOrdering> all_orderings(const Multigraph& g) {
    EdgeOrdering ids = g.sorted_edge_ids();
    std::vector<EdgeOrdering> out;
    do {
        out.push_back(ids);
    } while (std::next_permutation(ids.begin(), ids.end()));
    return out;
}

inline EdgeOrdering random_ordering(std::mt19937_64& rng, const Multigraph& g) {
    EdgeOrdering ids = g.sorted_edge_ids();
    std::shuffle(ids.begin(), ids.end(), rng);
    return ids;
}

// Edge ids 1..n over up to max_vertices vertices; loops show up now and then.
inline Multigraph random_multigraph(std::mt19937_64& rng, int n_edges, int max_vertices) {
    std::uniform_int_distribution<int> vcount(2, max_vertices);
    const int v = vcount(rng);
    std::uniform_int_distribution<int> vertex(0, v - 1);
    std::uniform_int_distribution<int> loop_roll(0, 9);
    std::vector<Edge> edges;
    for (int i = 1; i <= n_edges; ++i) {
        int a = vertex(rng);
        int b = loop_roll(rng) == 0 ? a : vertex(rng);
        edges.push_back({i, a, b});
    }
    return Multigraph(v, std::move(edges));
}

inline Rational random_probability(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> den_dist(1, 12);
    const int den = den_dist(rng);
    std::uniform_int_distribution<int> num_dist(0, den);
    return Rational{num_dist(rng), den};
}

// Isomorphism key: the lexicographically smallest relabelled edge list.
inline std::vector<std::pair<int, int>> canonical_edge_list(int vertices,
                                                            const std::vector<Edge>& edges) {
    std::vector<int> perm(vertices);
    for (int i = 0; i < vertices; ++i) perm[i] = i;
    std::vector<std::pair<int, int>> best;
    do {
        std::vector<std::pair<int, int>> mapped;
        for (const Edge& e : edges) {
            int a = perm[e.u], b = perm[e.v];
            mapped.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(mapped.begin(), mapped.end());
        if (best.empty() || mapped < best) best = mapped;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Every connected multigraph with at most max_edges edges, one representative
// per isomorphism class, edge ids 1..m.
inline std::vector<Multigraph> connected_multigraph_corpus(int max_edges) {
    std::vector<Multigraph> corpus;
    std::map<std::pair<int, std::vector<std::pair<int, int>>>, bool> seen;
    for (int m = 1; m <= max_edges; ++m) {
        for (int v = 1; v <= m + 1; ++v) {
            std::vector<std::pair<int, int>> slots;
            for (int i = 0; i < v; ++i)
                for (int j = i; j < v; ++j) slots.emplace_back(i, j);
            // multisets of m slots, non-decreasing slot index
            std::vector<int> pick(m, 0);
            while (true) {
                std::vector<Edge> edges;
                for (int i = 0; i < m; ++i)
                    edges.push_back({i + 1, slots[pick[i]].first, slots[pick[i]].second});
                Multigraph g(v, edges);
                if (g.component_count() == 1) {
                    auto key = std::make_pair(v, canonical_edge_list(v, edges));
                    if (!seen.count(key)) {
                        seen[key] = true;
                        corpus.push_back(std::move(g));
                    }
                }
                int i = m - 1;
                while (i >= 0 && pick[i] == static_cast<int>(slots.size()) - 1) --i;
                if (i < 0) break;
                const int next = pick[i] + 1;
                for (int j = i; j < m; ++j) pick[j] = next;
            }
        }
    }
    return corpus;
}

}  // namespace ordtutte::testing
