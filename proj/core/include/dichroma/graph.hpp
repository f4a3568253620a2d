#ifndef DICHROMA_GRAPH_HPP
#define DICHROMA_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "dichroma/errors.hpp"
#include "dichroma/vertex_set.hpp"

namespace dichroma {

// Total map between vertex ranges: map[v] in [0, image) for every v in [0, domain).
struct VertexMap {
    int domain = 0;
    int image = 0;
    std::vector<int> map;

    VertexMap() = default;
    VertexMap(int domain_size, int image_size, std::vector<int> assignment);

    int operator()(int v) const { return map[v]; }
    bool is_bijection() const;

    friend bool operator==(const VertexMap& a, const VertexMap& b) {
        return a.domain == b.domain && a.image == b.image && a.map == b.map;
    }
};

// Loopless digraph with parallel and anti-parallel arc multiplicities.
// Vertices are 0..n-1; the arc multiset is normalized to sorted order, so two
// digraphs compare equal iff they have the same order and arc multiset.
// Immutable after construction.
class MultiDigraph {
public:
    MultiDigraph() = default;
    MultiDigraph(int order, std::vector<std::pair<int, int>> arcs);

    int order() const { return n_; }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    std::size_t arc_count() const { return arcs_.size(); }

    bool has_arc(int tail, int head) const { return out_[tail].test(head); }
    int multiplicity(int tail, int head) const;

    // Existence masks (multiplicities collapsed).
    const VertexSet& out_neighbours(int v) const { return out_[v]; }
    const VertexSet& in_neighbours(int v) const { return in_[v]; }

    // In- plus out-degree counting multiplicities.
    int degree(int v) const { return degree_[v]; }

    friend bool operator==(const MultiDigraph& a, const MultiDigraph& b) {
        return a.n_ == b.n_ && a.arcs_ == b.arcs_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> arcs_;
    std::vector<VertexSet> out_, in_;
    std::vector<int> degree_;
};

// Loopless multigraph with edge multiplicities; a doubled edge is a cycle of
// length two. Edges normalized to (min, max) and sorted.
class MultiGraph {
public:
    MultiGraph() = default;
    MultiGraph(int order, std::vector<std::pair<int, int>> edges);

    int order() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_edge(int u, int w) const { return adj_[u].test(w); }
    int multiplicity(int u, int w) const;

    const VertexSet& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return degree_[v]; }

    friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<VertexSet> adj_;
    std::vector<int> degree_;
};

// True iff the subdigraph induced by s has no directed cycle. A digon inside
// s counts as a directed cycle of length two; parallel arcs in the same
// direction never do.
bool is_acyclic(const MultiDigraph& d, const VertexSet& s);

// True iff the subgraph induced by s has no cycle, a doubled edge counting as
// a cycle of length two.
bool is_forest(const MultiGraph& g, const VertexSet& s);

// Length of a shortest directed cycle, or nullopt when d is acyclic.
std::optional<int> digirth(const MultiDigraph& d);

// S(G): each edge replaced by an anti-parallel pair of arcs.
MultiDigraph symmetric_orientation(const MultiGraph& g);

// Simple graph with an edge {x,y} iff arcs in both directions exist.
MultiGraph symmetric_part(const MultiDigraph& d);

// Each edge copy oriented from its smaller to its larger endpoint.
MultiDigraph acyclic_orientation(const MultiGraph& g);

// All inclusion-maximal acyclic vertex sets, deterministically ordered.
// Every acyclic set is a subset of some returned set. Enumeration works by
// branching over directed cycles; intended scale is order <= 14.
std::vector<VertexSet> maximal_acyclic_sets(const MultiDigraph& d);

// All simple directed cycles as vertex sequences starting at the cycle's
// smallest vertex. max_length == 0 means unbounded; max_count == 0 means
// unbounded. When a positive max_count is hit, enumeration stops and the
// second member of the result is false (enumeration incomplete).
struct CycleList {
    std::vector<std::vector<int>> cycles;
    bool complete = true;
};
CycleList directed_cycles(const MultiDigraph& d, int max_length = 0, std::size_t max_count = 0);

} // namespace dichroma

#endif
