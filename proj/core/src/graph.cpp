#include "dichroma/graph.hpp"

#include <algorithm>
#include <unordered_set>

namespace dichroma {

VertexMap::VertexMap(int domain_size, int image_size, std::vector<int> assignment)
    : domain(domain_size), image(image_size), map(std::move(assignment)) {
    if (domain < 0 || image < 0) throw InputError("negative map dimension");
    if (static_cast<int>(map.size()) != domain)
        throw InputError("vertex map is not total over its domain");
    for (int v : map)
        if (v < 0 || v >= image) throw InputError("vertex map value out of range");
}

bool VertexMap::is_bijection() const {
    if (domain != image) return false;
    std::vector<char> seen(image, 0);
    for (int v : map) {
        if (seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

MultiDigraph::MultiDigraph(int order, std::vector<std::pair<int, int>> arcs)
    : n_(order), arcs_(std::move(arcs)) {
    if (order < 0) throw InputError("negative vertex count");
    for (auto [u, w] : arcs_) {
        if (u < 0 || u >= n_ || w < 0 || w >= n_) throw InputError("arc endpoint out of range");
        if (u == w) throw InputError("loops are not allowed");
    }
    std::sort(arcs_.begin(), arcs_.end());
    out_.assign(n_, VertexSet(n_));
    in_.assign(n_, VertexSet(n_));
    degree_.assign(n_, 0);
    for (auto [u, w] : arcs_) {
        out_[u].set(w);
        in_[w].set(u);
        ++degree_[u];
        ++degree_[w];
    }
}

int MultiDigraph::multiplicity(int tail, int head) const {
    auto range = std::equal_range(arcs_.begin(), arcs_.end(), std::make_pair(tail, head));
    return static_cast<int>(range.second - range.first);
}

MultiGraph::MultiGraph(int order, std::vector<std::pair<int, int>> edges)
    : n_(order), edges_(std::move(edges)) {
    if (order < 0) throw InputError("negative vertex count");
    for (auto& e : edges_) {
        auto [u, w] = e;
        if (u < 0 || u >= n_ || w < 0 || w >= n_) throw InputError("edge endpoint out of range");
        if (u == w) throw InputError("loops are not allowed");
        if (u > w) e = {w, u};
    }
    std::sort(edges_.begin(), edges_.end());
    adj_.assign(n_, VertexSet(n_));
    degree_.assign(n_, 0);
    for (auto [u, w] : edges_) {
        adj_[u].set(w);
        adj_[w].set(u);
        ++degree_[u];
        ++degree_[w];
    }
}

int MultiGraph::multiplicity(int u, int w) const {
    if (u > w) std::swap(u, w);
    auto range = std::equal_range(edges_.begin(), edges_.end(), std::make_pair(u, w));
    return static_cast<int>(range.second - range.first);
}

bool is_acyclic(const MultiDigraph& d, const VertexSet& s) {
    if (s.universe() != d.order()) throw InputError("vertex set does not match digraph order");
    const int n = d.order();
    std::vector<int> indeg(n, 0);
    std::vector<int> stack;
    int members = 0;
    for (int v = 0; v < n; ++v) {
        if (!s.test(v)) continue;
        ++members;
        indeg[v] = d.in_neighbours(v).intersection_count(s);
        if (indeg[v] == 0) stack.push_back(v);
    }
    int removed = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++removed;
        for (int w : (d.out_neighbours(v) & s).to_vector())
            if (--indeg[w] == 0) stack.push_back(w);
    }
    return removed == members;
}

bool is_forest(const MultiGraph& g, const VertexSet& s) {
    if (s.universe() != g.order()) throw InputError("vertex set does not match graph order");
    std::vector<int> parent(g.order());
    for (int v = 0; v < g.order(); ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (auto [u, w] : g.edges()) {
        if (!s.test(u) || !s.test(w)) continue;
        int ru = find(u), rw = find(w);
        if (ru == rw) return false;
        parent[ru] = rw;
    }
    return true;
}

std::optional<int> digirth(const MultiDigraph& d) {
    const int n = d.order();
    int best = n + 1;
    std::vector<int> dist(n);
    std::vector<int> queue;
    for (int start = 0; start < n; ++start) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[start] = 0;
        queue.assign(1, start);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            if (dist[v] + 1 >= best) continue;
            for (int w : d.out_neighbours(v).to_vector()) {
                if (w == start) {
                    best = std::min(best, dist[v] + 1);
                    continue;
                }
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    if (best > n) return std::nullopt;
    return best;
}

MultiDigraph symmetric_orientation(const MultiGraph& g) {
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(2 * g.edge_count());
    for (auto [u, w] : g.edges()) {
        arcs.emplace_back(u, w);
        arcs.emplace_back(w, u);
    }
    return MultiDigraph(g.order(), std::move(arcs));
}

MultiGraph symmetric_part(const MultiDigraph& d) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < d.order(); ++u)
        for (int w = u + 1; w < d.order(); ++w)
            if (d.has_arc(u, w) && d.has_arc(w, u)) edges.emplace_back(u, w);
    return MultiGraph(d.order(), std::move(edges));
}

MultiDigraph acyclic_orientation(const MultiGraph& g) {
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(g.edge_count());
    for (auto [u, w] : g.edges()) arcs.emplace_back(u, w);
    return MultiDigraph(g.order(), std::move(arcs));
}

namespace {

// One directed cycle of d[s] as a vertex list, or empty when d[s] is acyclic.
std::vector<int> find_directed_cycle(const MultiDigraph& d, const VertexSet& s) {
    const int n = d.order();
    std::vector<int> state(n, 0); // 0 unseen, 1 on stack, 2 done
    std::vector<int> path;
    std::vector<int> cycle;

    auto dfs = [&](auto&& self, int v) -> bool {
        state[v] = 1;
        path.push_back(v);
        for (int w : (d.out_neighbours(v) & s).to_vector()) {
            if (state[w] == 1) {
                auto it = std::find(path.begin(), path.end(), w);
                cycle.assign(it, path.end());
                return true;
            }
            if (state[w] == 0 && self(self, w)) return true;
        }
        state[v] = 2;
        path.pop_back();
        return false;
    };

    for (int v = 0; v < n; ++v)
        if (s.test(v) && state[v] == 0 && dfs(dfs, v)) break;
    return cycle;
}

} // namespace

std::vector<VertexSet> maximal_acyclic_sets(const MultiDigraph& d) {
    const int n = d.order();
    std::vector<VertexSet> leaves;
    std::unordered_set<VertexSet, VertexSetHash> visited;

    auto recurse = [&](auto&& self, const VertexSet& s) -> void {
        if (!visited.insert(s).second) return;
        auto cycle = find_directed_cycle(d, s);
        if (cycle.empty()) {
            leaves.push_back(s);
            return;
        }
        for (int v : cycle) {
            VertexSet next = s;
            next.reset(v);
            self(self, next);
        }
    };
    recurse(recurse, VertexSet::full(n));

    // Keep only inclusion-maximal leaves.
    std::sort(leaves.begin(), leaves.end(), [](const VertexSet& a, const VertexSet& b) {
        return a.count() > b.count();
    });
    std::vector<VertexSet> maximal;
    for (const auto& s : leaves) {
        bool covered = false;
        for (const auto& m : maximal)
            if (s.subset_of(m)) {
                covered = true;
                break;
            }
        if (!covered) maximal.push_back(s);
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

CycleList directed_cycles(const MultiDigraph& d, int max_length, std::size_t max_count) {
    const int n = d.order();
    CycleList result;
    std::vector<char> on_path(n, 0);
    std::vector<int> path;

    // Roots in increasing order; a cycle is reported from its smallest vertex,
    // so only vertices above the root may appear later on the path.
    auto dfs = [&](auto&& self, int root, int v) -> bool {
        if (max_count > 0 && result.cycles.size() >= max_count) {
            result.complete = false;
            return true;
        }
        for (int w : d.out_neighbours(v).to_vector()) {
            if (w == root) {
                result.cycles.push_back(path);
                if (max_count > 0 && result.cycles.size() >= max_count) {
                    result.complete = false;
                    return true;
                }
                continue;
            }
            if (w < root || on_path[w]) continue;
            if (max_length > 0 && static_cast<int>(path.size()) >= max_length) continue;
            on_path[w] = 1;
            path.push_back(w);
            bool stop = self(self, root, w);
            path.pop_back();
            on_path[w] = 0;
            if (stop) return true;
        }
        return false;
    };

    for (int root = 0; root < n; ++root) {
        path.assign(1, root);
        on_path[root] = 1;
        bool stop = dfs(dfs, root, root);
        on_path[root] = 0;
        if (stop) break;
    }
    return result;
}

} // namespace dichroma
