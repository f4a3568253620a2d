#ifndef DICHROMA_HOMOMORPHISM_HPP
#define DICHROMA_HOMOMORPHISM_HPP

#include <optional>

#include "dichroma/graph.hpp"

namespace dichroma {

enum class HomKind { graph, acyclic, circular };

// phi preserves adjacency: every edge of g maps onto an edge of h.
bool is_graph_hom(const MultiGraph& g, const MultiGraph& h, const VertexMap& phi);

// Every arc maps to an arc or collapses, and every vertex preimage is acyclic.
bool is_acyclic_hom(const MultiDigraph& d1, const MultiDigraph& d2, const VertexMap& phi);

// Preimages of acyclic sets stay acyclic; tested on the maximal acyclic sets
// of d2, which suffices because acyclicity is hereditary.
bool is_circular_hom(const MultiDigraph& d1, const MultiDigraph& d2, const VertexMap& phi);

// Backtracking existence search. Returns the lexicographically least
// homomorphism in assignment order (vertices 0..n-1), or nullopt.
std::optional<VertexMap> find_hom(HomKind kind, const MultiGraph& source, const MultiGraph& target);
std::optional<VertexMap> find_hom(HomKind kind, const MultiDigraph& source, const MultiDigraph& target);

// True iff every self-homomorphism of the given kind is a bijection.
// Exhaustive over self-maps with pruning; rejects orders above max_order.
bool is_core(HomKind kind, const MultiDigraph& d, int max_order = 8);

} // namespace dichroma

#endif
