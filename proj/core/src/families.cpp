#include "dichroma/families.hpp"

#include <algorithm>

namespace dichroma {

int circular_distance(int k, int x, int y) {
    if (k < 1) throw InputError("modulus must be positive");
    if (x < 0 || x >= k || y < 0 || y >= k) throw InputError("element out of Z_k range");
    int m = ((x - y) % k + k) % k;
    return std::min(m, k - m);
}

VertexSet cyclic_interval(int k, int i, int d) {
    if (k < 1) throw InputError("modulus must be positive");
    if (d < 1 || d > k) throw InputError("interval size must lie in [1, k]");
    if (i < 0 || i >= k) throw InputError("interval start out of Z_k range");
    VertexSet s(k);
    for (int t = 0; t < d; ++t) s.set((i + t) % k);
    return s;
}

bool within_cyclic_interval(int k, int d, const VertexSet& a) {
    if (a.universe() != k) throw InputError("set universe does not match modulus");
    if (d >= k) return true;
    for (int i = 0; i < k; ++i)
        if (a.subset_of(cyclic_interval(k, i, d))) return true;
    return false;
}

MultiDigraph circulant_digraph(int k, int d) {
    if (k < 1 || d < 1 || d > k) throw InputError("require 1 <= d <= k");
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < k; ++i)
        for (int offset = d; offset < k; ++offset) arcs.emplace_back(i, (i + offset) % k);
    return MultiDigraph(k, std::move(arcs));
}

MultiGraph circulant_graph(int k, int d) {
    if (d < 1) throw InputError("require d >= 1");
    if (k < 2 * d) throw InputError("circulant graph requires k >= 2d");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (circular_distance(k, i, j) >= d) edges.emplace_back(i, j);
    return MultiGraph(k, std::move(edges));
}

int min_noninterval_size(int k, int d) {
    if (d < 1 || k <= d) throw InputError("require k > d >= 1");
    return (k + (k - d) - 1) / (k - d);
}

MultiGraph aux_graph_h(int k, int d) {
    const int target = min_noninterval_size(k, d);
    if (k > 30) throw CapacityError("aux graph enumeration supports k <= 30");
    std::vector<std::pair<int, int>> edges;
    std::vector<char> adjacent(static_cast<std::size_t>(k) * k, 0);
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        if (__builtin_popcount(mask) != target) continue;
        VertexSet a(k);
        for (int v = 0; v < k; ++v)
            if (mask & (1u << v)) a.set(v);
        if (within_cyclic_interval(k, d, a)) continue;
        auto members = a.to_vector();
        for (std::size_t x = 0; x < members.size(); ++x)
            for (std::size_t y = x + 1; y < members.size(); ++y)
                adjacent[static_cast<std::size_t>(members[x]) * k + members[y]] = 1;
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (adjacent[static_cast<std::size_t>(i) * k + j]) edges.emplace_back(i, j);
    return MultiGraph(k, std::move(edges));
}

MultiGraph aux_graph_hf(const MultiDigraph& f) {
    auto girth = digirth(f);
    if (!girth) throw InputError("digraph is acyclic; its digirth is undefined");
    auto cycles = directed_cycles(f, *girth);
    std::vector<std::pair<int, int>> edges;
    std::vector<char> adjacent(static_cast<std::size_t>(f.order()) * f.order(), 0);
    for (const auto& cycle : cycles.cycles) {
        if (static_cast<int>(cycle.size()) != *girth) continue;
        for (std::size_t x = 0; x < cycle.size(); ++x)
            for (std::size_t y = x + 1; y < cycle.size(); ++y) {
                int u = std::min(cycle[x], cycle[y]);
                int w = std::max(cycle[x], cycle[y]);
                adjacent[static_cast<std::size_t>(u) * f.order() + w] = 1;
            }
    }
    for (int u = 0; u < f.order(); ++u)
        for (int w = u + 1; w < f.order(); ++w)
            if (adjacent[static_cast<std::size_t>(u) * f.order() + w]) edges.emplace_back(u, w);
    return MultiGraph(f.order(), std::move(edges));
}

MultiDigraph directed_cycle(int n) {
    if (n < 2) throw InputError("a directed cycle needs at least two vertices");
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
    return MultiDigraph(n, std::move(arcs));
}

} // namespace dichroma
