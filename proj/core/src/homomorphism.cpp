#include "dichroma/homomorphism.hpp"

#include <algorithm>

namespace dichroma {

namespace {

void check_dims(int domain, int image, const VertexMap& phi) {
    if (phi.domain != domain || phi.image != image)
        throw InputError("vertex map dimensions do not match the given (di)graphs");
}

} // namespace

bool is_graph_hom(const MultiGraph& g, const MultiGraph& h, const VertexMap& phi) {
    check_dims(g.order(), h.order(), phi);
    for (auto [u, w] : g.edges()) {
        int a = phi(u), b = phi(w);
        if (a == b || !h.has_edge(a, b)) return false;
    }
    return true;
}

bool is_acyclic_hom(const MultiDigraph& d1, const MultiDigraph& d2, const VertexMap& phi) {
    check_dims(d1.order(), d2.order(), phi);
    for (auto [u, w] : d1.arcs()) {
        int a = phi(u), b = phi(w);
        if (a != b && !d2.has_arc(a, b)) return false;
    }
    for (int t = 0; t < d2.order(); ++t) {
        VertexSet preimage(d1.order());
        for (int v = 0; v < d1.order(); ++v)
            if (phi(v) == t) preimage.set(v);
        if (!is_acyclic(d1, preimage)) return false;
    }
    return true;
}

bool is_circular_hom(const MultiDigraph& d1, const MultiDigraph& d2, const VertexMap& phi) {
    check_dims(d1.order(), d2.order(), phi);
    for (const auto& target_set : maximal_acyclic_sets(d2)) {
        VertexSet preimage(d1.order());
        for (int v = 0; v < d1.order(); ++v)
            if (target_set.test(phi(v))) preimage.set(v);
        if (!is_acyclic(d1, preimage)) return false;
    }
    return true;
}

namespace {

// Backtracking over assignments phi(0), phi(1), ... with values tried in
// increasing order, so the first complete map found is the lexicographically
// least one the pruning admits.
class GraphHomSearch {
public:
    GraphHomSearch(const MultiGraph& g, const MultiGraph& h) : g_(g), h_(h) {}

    std::optional<VertexMap> run() {
        phi_.assign(g_.order(), -1);
        if (extend(0)) return VertexMap(g_.order(), h_.order(), phi_);
        return std::nullopt;
    }

private:
    bool extend(int v) {
        if (v == g_.order()) return true;
        for (int t = 0; t < h_.order(); ++t) {
            if (!consistent(v, t)) continue;
            phi_[v] = t;
            if (extend(v + 1)) return true;
            phi_[v] = -1;
        }
        return false;
    }

    bool consistent(int v, int t) const {
        for (int u : g_.neighbours(v).to_vector()) {
            if (phi_[u] < 0) continue;
            if (phi_[u] == t || !h_.has_edge(phi_[u], t)) return false;
        }
        return true;
    }

    const MultiGraph& g_;
    const MultiGraph& h_;
    std::vector<int> phi_;
};

class AcyclicHomSearch {
public:
    AcyclicHomSearch(const MultiDigraph& d1, const MultiDigraph& d2) : d1_(d1), d2_(d2) {
        preimage_.assign(d2_.order(), VertexSet(d1_.order()));
    }

    std::optional<VertexMap> run() {
        phi_.assign(d1_.order(), -1);
        if (extend(0)) return VertexMap(d1_.order(), d2_.order(), phi_);
        return std::nullopt;
    }

private:
    bool extend(int v) {
        if (v == d1_.order()) return true;
        for (int t = 0; t < d2_.order(); ++t) {
            if (!arcs_consistent(v, t)) continue;
            preimage_[t].set(v);
            bool ok = is_acyclic(d1_, preimage_[t]) && extend(v + 1);
            if (ok) return true;
            preimage_[t].reset(v);
        }
        return false;
    }

    bool arcs_consistent(int v, int t) const {
        for (int u = 0; u < d1_.order(); ++u) {
            if (phi_[u] < 0) continue;
            if (d1_.has_arc(v, u) && phi_[u] != t && !d2_.has_arc(t, phi_[u])) return false;
            if (d1_.has_arc(u, v) && phi_[u] != t && !d2_.has_arc(phi_[u], t)) return false;
        }
        return true;
    }

    const MultiDigraph& d1_;
    const MultiDigraph& d2_;
    std::vector<int> phi_;
    std::vector<VertexSet> preimage_;
};

// Circular homomorphism search. Soundness of the pruning: once a directed
// cycle of the source is fully mapped its image set is final, so if that
// image induces no directed cycle in the target, no extension can repair it.
// When the source's cycle list was enumerated completely the leaf needs no
// further verification; otherwise the maximal-acyclic-set test runs at leaves.
class CircularHomSearch {
public:
    CircularHomSearch(const MultiDigraph& d1, const MultiDigraph& d2, bool self_maps_only)
        : d1_(d1), d2_(d2), skip_bijections_(self_maps_only) {
        auto list = directed_cycles(d1_, 0, kCycleBudget);
        cycles_complete_ = list.complete;
        cycles_by_last_.assign(d1_.order(), {});
        for (auto& cycle : list.cycles) {
            int last = *std::max_element(cycle.begin(), cycle.end());
            cycles_by_last_[last].push_back(std::move(cycle));
        }
        if (!cycles_complete_) target_maximal_ = maximal_acyclic_sets(d2_);
    }

    std::optional<VertexMap> run() {
        phi_.assign(d1_.order(), -1);
        if (extend(0)) return VertexMap(d1_.order(), d2_.order(), phi_);
        return std::nullopt;
    }

private:
    static constexpr std::size_t kCycleBudget = 20000;

    bool extend(int v) {
        if (v == d1_.order()) return accept_leaf();
        for (int t = 0; t < d2_.order(); ++t) {
            phi_[v] = t;
            if (cycles_ok(v) && extend(v + 1)) return true;
        }
        phi_[v] = -1;
        return false;
    }

    bool cycles_ok(int v) const {
        for (const auto& cycle : cycles_by_last_[v]) {
            VertexSet image(d2_.order());
            for (int u : cycle) image.set(phi_[u]);
            if (is_acyclic(d2_, image)) return false;
        }
        return true;
    }

    bool accept_leaf() const {
        if (skip_bijections_ && is_bijective()) return false;
        if (cycles_complete_) return true;
        for (const auto& target_set : target_maximal_) {
            VertexSet preimage(d1_.order());
            for (int u = 0; u < d1_.order(); ++u)
                if (target_set.test(phi_[u])) preimage.set(u);
            if (!is_acyclic(d1_, preimage)) return false;
        }
        return true;
    }

    bool is_bijective() const {
        if (d1_.order() != d2_.order()) return false;
        std::vector<char> seen(d2_.order(), 0);
        for (int t : phi_) {
            if (seen[t]) return false;
            seen[t] = 1;
        }
        return true;
    }

    const MultiDigraph& d1_;
    const MultiDigraph& d2_;
    bool skip_bijections_;
    bool cycles_complete_ = true;
    std::vector<std::vector<std::vector<int>>> cycles_by_last_;
    std::vector<VertexSet> target_maximal_;
    std::vector<int> phi_;
};

// Self-map search for acyclic cores: every leaf the pruning admits is a valid
// acyclic homomorphism, so reaching a non-bijective leaf refutes coreness.
class AcyclicSelfMapSearch {
public:
    explicit AcyclicSelfMapSearch(const MultiDigraph& d) : d_(d) {
        preimage_.assign(d_.order(), VertexSet(d_.order()));
    }

    bool non_bijective_hom_exists() {
        phi_.assign(d_.order(), -1);
        return extend(0);
    }

private:
    bool extend(int v) {
        if (v == d_.order()) return !VertexMap(d_.order(), d_.order(), phi_).is_bijection();
        for (int t = 0; t < d_.order(); ++t) {
            if (!arcs_consistent(v, t)) continue;
            phi_[v] = t;
            preimage_[t].set(v);
            if (is_acyclic(d_, preimage_[t]) && extend(v + 1)) return true;
            preimage_[t].reset(v);
            phi_[v] = -1;
        }
        return false;
    }

    bool arcs_consistent(int v, int t) const {
        for (int u = 0; u < d_.order(); ++u) {
            if (phi_[u] < 0) continue;
            if (d_.has_arc(v, u) && phi_[u] != t && !d_.has_arc(t, phi_[u])) return false;
            if (d_.has_arc(u, v) && phi_[u] != t && !d_.has_arc(phi_[u], t)) return false;
        }
        return true;
    }

    const MultiDigraph& d_;
    std::vector<int> phi_;
    std::vector<VertexSet> preimage_;
};

} // namespace

std::optional<VertexMap> find_hom(HomKind kind, const MultiGraph& source, const MultiGraph& target) {
    if (kind != HomKind::graph)
        throw InputError("graph endpoints require the graph homomorphism kind");
    if (source.order() > 0 && target.order() == 0) return std::nullopt;
    return GraphHomSearch(source, target).run();
}

std::optional<VertexMap> find_hom(HomKind kind, const MultiDigraph& source, const MultiDigraph& target) {
    if (kind == HomKind::graph)
        throw InputError("digraph endpoints require the acyclic or circular kind");
    if (source.order() > 0 && target.order() == 0) return std::nullopt;
    if (kind == HomKind::acyclic) return AcyclicHomSearch(source, target).run();
    return CircularHomSearch(source, target, false).run();
}

bool is_core(HomKind kind, const MultiDigraph& d, int max_order) {
    if (kind == HomKind::graph) throw InputError("core check expects a digraph homomorphism kind");
    if (d.order() > max_order)
        throw CapacityError("core check limited to order " + std::to_string(max_order));
    if (kind == HomKind::acyclic) return !AcyclicSelfMapSearch(d).non_bijective_hom_exists();
    return !CircularHomSearch(d, d, true).run().has_value();
}

} // namespace dichroma
