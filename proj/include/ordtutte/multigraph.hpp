#pragma once

#include <set>
#include <string>
#include <vector>

namespace ordtutte {

struct Edge {
    int id;  // original label, stable across contraction/deletion
    int u;
    int v;
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected multigraph with labelled edges. Loops and parallel edges are
// allowed. All reduction operations are pure: they return fresh graphs and
// never touch edge ids.
class Multigraph {
public:
    Multigraph() = default;
    Multigraph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return vertex_count_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_edge(int id) const;
    const Edge& edge(int id) const;  // throws "no such edge"
    bool is_loop(int id) const { return edge(id).u == edge(id).v; }
    std::vector<int> edge_ids() const;         // in storage order
    std::vector<int> sorted_edge_ids() const;  // ascending

    // Merge the endpoints of a non-loop edge (into the lower-indexed vertex,
    // remaining vertices renumbered down) and drop the edge. Contracting a
    // loop is defined as deleting it: the vertex count is preserved.
    Multigraph contracted(int id) const;

    Multigraph deleted(int id) const;

    // Connected components of (all vertices, all edges); isolated vertices
    // each count as one component.
    int component_count() const;

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
};

// 1 iff e and f share at least one endpoint (a loop shares its single
// vertex), else 0. Always 0/1, even for parallel edges sharing both
// endpoints. Throws on e == f ("self-adjacency undefined").
int line_adjacency(const Multigraph& g, int e, int f);

// Processing order: position 1 = ordering.front().
using EdgeOrdering = std::vector<int>;

// Throws unless the ordering is a permutation of g's edge ids.
void validate_ordering(const Multigraph& g, const EdgeOrdering& ordering);

// Spanning subgraph = all vertices plus this edge id subset.
using EdgeIdSet = std::set<int>;

// Number of connected components of the spanning subgraph (V, b).
int spanning_component_count(const Multigraph& g, const EdgeIdSet& b);

// Element k is the graph after processing the first k edges of the ordering:
// contract if the edge is in b, delete otherwise. Element 0 is g itself;
// element n is edgeless with vertex count spanning_component_count(g, b).
std::vector<Multigraph> reduced_sequence(const Multigraph& g, const EdgeOrdering& ordering,
                                         const EdgeIdSet& b);

// Side-by-side union; the right graph's vertices are shifted past the left
// graph's. Edge id sets must be disjoint.
Multigraph disjoint_union(const Multigraph& a, const Multigraph& b);

// One subgraph per connected component (vertices renumbered, edge ids kept),
// ordered by smallest original vertex. Isolated vertices become one-vertex
// components.
std::vector<Multigraph> connected_components(const Multigraph& g);

}  // namespace ordtutte
