#ifndef DICHROMA_FAMILIES_HPP
#define DICHROMA_FAMILIES_HPP

#include "dichroma/graph.hpp"

namespace dichroma {

struct KdPair {
    int k = 1;
    int d = 1;
};

// |(x-y) mod k|_k = min(m, k-m) with m = (x-y) mod k.
int circular_distance(int k, int x, int y);

// {i, i+1, ..., i+d-1} mod k, as a subset of Z_k. Requires 1 <= d <= k.
VertexSet cyclic_interval(int k, int i, int d);

// True iff a fits inside some cyclic interval of size d in Z_k.
bool within_cyclic_interval(int k, int d, const VertexSet& a);

// Circulant digraph on Z_k with an arc (i,j) iff (j-i) mod k >= d.
MultiDigraph circulant_digraph(int k, int d);

// Circulant graph on Z_k with an edge {i,j} iff circular_distance >= d.
// Defined only for k >= 2d.
MultiGraph circulant_graph(int k, int d);

// Minimal size of a subset of Z_k contained in no cyclic interval of size d:
// ceil(k / (k-d)). Requires k > d >= 1.
int min_noninterval_size(int k, int d);

// Auxiliary graph on Z_k: {i,j} adjacent iff some minimum-size set escaping
// every cyclic d-interval contains both. Requires k > d >= 1.
MultiGraph aux_graph_h(int k, int d);

// Auxiliary graph on V(f): u != v adjacent iff a directed cycle of length
// exactly digirth(f) contains both. Requires f to contain a directed cycle.
MultiGraph aux_graph_hf(const MultiDigraph& f);

// Directed cycle 0 -> 1 -> ... -> n-1 -> 0.
MultiDigraph directed_cycle(int n);

} // namespace dichroma

#endif
