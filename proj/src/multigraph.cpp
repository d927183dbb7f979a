#include "ordtutte/multigraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace ordtutte {

namespace {

// Minimal union-find over vertex indices.
class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(int a, int b) { parent_[find(a)] = find(b); }
    int set_count() {
        int count = 0;
        for (int i = 0; i < static_cast<int>(parent_.size()); ++i)
            if (find(i) == i) ++count;
        return count;
    }

private:
    std::vector<int> parent_;
};

}  // namespace

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 0) throw std::invalid_argument("negative vertex count");
    std::unordered_set<int> seen;
    for (const Edge& e : edges_) {
        if (e.id <= 0) throw std::invalid_argument("edge ids must be positive");
        if (!seen.insert(e.id).second)
            throw std::invalid_argument("duplicate edge id " + std::to_string(e.id));
        if (e.u < 0 || e.u >= vertex_count_ || e.v < 0 || e.v >= vertex_count_)
            throw std::invalid_argument("edge " + std::to_string(e.id) +
                                        " endpoint out of range");
    }
}

bool Multigraph::has_edge(int id) const {
    return std::any_of(edges_.begin(), edges_.end(),
                       [id](const Edge& e) { return e.id == id; });
}

const Edge& Multigraph::edge(int id) const {
    for (const Edge& e : edges_)
        if (e.id == id) return e;
    throw std::invalid_argument("no such edge: " + std::to_string(id));
}

std::vector<int> Multigraph::edge_ids() const {
    std::vector<int> ids;
    ids.reserve(edges_.size());
    for (const Edge& e : edges_) ids.push_back(e.id);
    return ids;
}

std::vector<int> Multigraph::sorted_edge_ids() const {
    std::vector<int> ids = edge_ids();
    std::sort(ids.begin(), ids.end());
    return ids;
}

Multigraph Multigraph::contracted(int id) const {
    const Edge& e = edge(id);
    if (e.u == e.v) return deleted(id);
    const int keep = std::min(e.u, e.v);
    const int gone = std::max(e.u, e.v);
    std::vector<Edge> out;
    out.reserve(edges_.size() - 1);
    for (const Edge& f : edges_) {
        if (f.id == id) continue;
        auto remap = [&](int w) {
            if (w == gone) return keep;
            return w > gone ? w - 1 : w;
        };
        out.push_back({f.id, remap(f.u), remap(f.v)});
    }
    Multigraph g;
    g.vertex_count_ = vertex_count_ - 1;
    g.edges_ = std::move(out);
    return g;
}

Multigraph Multigraph::deleted(int id) const {
    edge(id);  // existence check
    std::vector<Edge> out;
    out.reserve(edges_.size() - 1);
    for (const Edge& f : edges_)
        if (f.id != id) out.push_back(f);
    Multigraph g;
    g.vertex_count_ = vertex_count_;
    g.edges_ = std::move(out);
    return g;
}

int Multigraph::component_count() const {
    DisjointSets sets(vertex_count_);
    for (const Edge& e : edges_) sets.unite(e.u, e.v);
    return sets.set_count();
}

int line_adjacency(const Multigraph& g, int e, int f) {
    if (e == f) throw std::invalid_argument("self-adjacency undefined");
    const Edge& a = g.edge(e);
    const Edge& b = g.edge(f);
    return (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) ? 1 : 0;
}

void validate_ordering(const Multigraph& g, const EdgeOrdering& ordering) {
    std::vector<int> sorted = ordering;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.sorted_edge_ids())
        throw std::invalid_argument("ordering is not a permutation of the edge set");
}

int spanning_component_count(const Multigraph& g, const EdgeIdSet& b) {
    DisjointSets sets(g.vertex_count());
    for (const Edge& e : g.edges())
        if (b.count(e.id)) sets.unite(e.u, e.v);
    return sets.set_count();
}

std::vector<Multigraph> reduced_sequence(const Multigraph& g, const EdgeOrdering& ordering,
                                         const EdgeIdSet& b) {
    validate_ordering(g, ordering);
    std::vector<Multigraph> out;
    out.reserve(ordering.size() + 1);
    out.push_back(g);
    for (int id : ordering) {
        const Multigraph& cur = out.back();
        out.push_back(b.count(id) ? cur.contracted(id) : cur.deleted(id));
    }
    return out;
}

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
    std::vector<Edge> edges = a.edges();
    const int shift = a.vertex_count();
    for (const Edge& e : b.edges()) edges.push_back({e.id, e.u + shift, e.v + shift});
    return Multigraph(a.vertex_count() + b.vertex_count(), std::move(edges));
}

std::vector<Multigraph> connected_components(const Multigraph& g) {
    DisjointSets sets(g.vertex_count());
    for (const Edge& e : g.edges()) sets.unite(e.u, e.v);

    std::map<int, int> component_index;  // root vertex -> component slot
    std::vector<std::vector<int>> vertices;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int root = sets.find(v);
        auto [it, fresh] = component_index.emplace(root, vertices.size());
        if (fresh) vertices.emplace_back();
        vertices[it->second].push_back(v);
    }

    std::vector<std::vector<Edge>> edges(vertices.size());
    std::vector<std::map<int, int>> renumber(vertices.size());
    for (std::size_t c = 0; c < vertices.size(); ++c)
        for (std::size_t i = 0; i < vertices[c].size(); ++i)
            renumber[c][vertices[c][i]] = static_cast<int>(i);
    for (const Edge& e : g.edges()) {
        const int c = component_index.at(sets.find(e.u));
        edges[c].push_back({e.id, renumber[c].at(e.u), renumber[c].at(e.v)});
    }

    std::vector<Multigraph> out;
    out.reserve(vertices.size());
    for (std::size_t c = 0; c < vertices.size(); ++c)
        out.emplace_back(static_cast<int>(vertices[c].size()), std::move(edges[c]));
    return out;
}

}  // namespace ordtutte
