#include "dichroma/colouring.hpp"

#include <algorithm>
#include <numeric>

#include "dichroma/homomorphism.hpp"

namespace dichroma {

std::string to_string(ColouringKind kind) {
    switch (kind) {
        case ColouringKind::dichromatic: return "dichromatic";
        case ColouringKind::circular_kd: return "circular-kd";
        case ColouringKind::acyclic_kd: return "acyclic-kd";
        case ColouringKind::tree_kd: return "tree-kd";
        case ColouringKind::b_tuple: return "b-tuple";
    }
    throw InputError("unknown colouring kind");
}

ColouringKind colouring_kind_from_string(const std::string& text) {
    if (text == "dichromatic") return ColouringKind::dichromatic;
    if (text == "circular-kd") return ColouringKind::circular_kd;
    if (text == "acyclic-kd") return ColouringKind::acyclic_kd;
    if (text == "tree-kd") return ColouringKind::tree_kd;
    if (text == "b-tuple") return ColouringKind::b_tuple;
    throw InputError("unknown colouring kind: " + text);
}

namespace {

void check_kd(int k, int d) {
    if (k < 1 || d < 1 || d > k) throw InputError("require k >= d >= 1");
}

bool colours_in_range(const std::vector<int>& colours, int n, int k) {
    if (static_cast<int>(colours.size()) != n)
        throw InputError("colouring length does not match vertex count");
    return std::all_of(colours.begin(), colours.end(), [k](int c) { return c >= 0 && c < k; });
}

VertexSet colour_class(const std::vector<int>& colours, int n, int colour) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if (colours[v] == colour) s.set(v);
    return s;
}

VertexSet interval_preimage(const std::vector<int>& colours, int n, int k, int start, int d) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v) {
        int offset = ((colours[v] - start) % k + k) % k;
        if (offset < d) s.set(v);
    }
    return s;
}

} // namespace

bool validate_colouring(const MultiDigraph& d, const Colouring& c) {
    check_kd(c.k, c.d);
    const int n = d.order();
    switch (c.kind) {
        case ColouringKind::dichromatic: {
            if (!colours_in_range(c.colours, n, c.k)) return false;
            for (int i = 0; i < c.k; ++i)
                if (!is_acyclic(d, colour_class(c.colours, n, i))) return false;
            return true;
        }
        case ColouringKind::circular_kd: {
            if (!colours_in_range(c.colours, n, c.k)) return false;
            for (auto [u, w] : d.arcs()) {
                int diff = ((c.colours[w] - c.colours[u]) % c.k + c.k) % c.k;
                if (c.colours[u] != c.colours[w] && diff < c.d) return false;
            }
            for (int i = 0; i < c.k; ++i)
                if (!is_acyclic(d, colour_class(c.colours, n, i))) return false;
            return true;
        }
        case ColouringKind::acyclic_kd: {
            if (!colours_in_range(c.colours, n, c.k)) return false;
            for (int i = 0; i < c.k; ++i)
                if (!is_acyclic(d, interval_preimage(c.colours, n, c.k, i, c.d))) return false;
            return true;
        }
        case ColouringKind::b_tuple: {
            if (static_cast<int>(c.tuples.size()) != n)
                throw InputError("tuple assignment length does not match vertex count");
            for (const auto& tuple : c.tuples) {
                if (static_cast<int>(tuple.size()) != c.d) return false;
                std::vector<int> sorted = tuple;
                std::sort(sorted.begin(), sorted.end());
                if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
                if (sorted.front() < 1 || sorted.back() > c.k) return false;
            }
            for (int colour = 1; colour <= c.k; ++colour) {
                VertexSet incidence(n);
                for (int v = 0; v < n; ++v)
                    if (std::find(c.tuples[v].begin(), c.tuples[v].end(), colour) !=
                        c.tuples[v].end())
                        incidence.set(v);
                if (!is_acyclic(d, incidence)) return false;
            }
            return true;
        }
        case ColouringKind::tree_kd:
            throw InputError("tree colourings apply to graphs, not digraphs");
    }
    throw InputError("unknown colouring kind");
}

bool validate_colouring(const MultiGraph& g, const Colouring& c) {
    check_kd(c.k, c.d);
    if (c.kind != ColouringKind::tree_kd)
        throw InputError("only tree colourings apply to graphs");
    const int n = g.order();
    if (!colours_in_range(c.colours, n, c.k)) return false;
    for (int i = 0; i < c.k; ++i)
        if (!is_forest(g, interval_preimage(c.colours, n, c.k, i, c.d))) return false;
    return true;
}

namespace {

// Assignment order shared by all decision searches: descending degree, ties
// by index. The first vertex in the order is pinned to the least admissible
// colour choice, justified by the rotation symmetry of cyclic intervals
// (full colour permutations for the dichromatic and b-tuple kinds).
std::vector<int> degree_order(const std::vector<int>& degrees) {
    std::vector<int> order(degrees.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return degrees[a] > degrees[b]; });
    return order;
}

// Backtracking search for colourings of a digraph whose cyclic d-interval
// preimages must all stay acyclic (d = 1 gives plain digraph colourings).
class IntervalColouringSearch {
public:
    IntervalColouringSearch(const MultiDigraph& d, int k, int interval)
        : d_(d), k_(k), len_(interval) {
        std::vector<int> degrees(d.order());
        for (int v = 0; v < d.order(); ++v) degrees[v] = d.degree(v);
        order_ = degree_order(degrees);
        members_.assign(k_, VertexSet(d.order()));
    }

    std::optional<std::vector<int>> run() {
        colour_.assign(d_.order(), -1);
        if (extend(0)) return colour_;
        return std::nullopt;
    }

private:
    bool extend(int depth) {
        if (depth == d_.order()) return true;
        int v = order_[depth];
        int limit = depth == 0 ? 1 : k_;
        for (int c = 0; c < limit; ++c) {
            colour_[v] = c;
            if (place(v, c)) {
                if (extend(depth + 1)) return true;
                unplace(v, c);
            }
            colour_[v] = -1;
        }
        return false;
    }

    // Adds v to every interval containing colour c, checking acyclicity of
    // each touched interval; rolls back on failure.
    bool place(int v, int c) {
        for (int t = 0; t < len_; ++t) {
            int i = ((c - t) % k_ + k_) % k_;
            members_[i].set(v);
            if (!is_acyclic(d_, members_[i])) {
                for (int back = t; back >= 0; --back)
                    members_[((c - back) % k_ + k_) % k_].reset(v);
                return false;
            }
        }
        return true;
    }

    void unplace(int v, int c) {
        for (int t = 0; t < len_; ++t) members_[((c - t) % k_ + k_) % k_].reset(v);
    }

    const MultiDigraph& d_;
    int k_, len_;
    std::vector<int> order_;
    std::vector<int> colour_;
    std::vector<VertexSet> members_;
};

// Union-find with undo, one structure per cyclic interval, for the
// tree-colouring search.
class ForestTracker {
public:
    explicit ForestTracker(int n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int v) const {
        while (parent_[v] != v) v = parent_[v];
        return v;
    }

    // False when u and w are already connected (a cycle would close).
    bool link(int u, int w) {
        int ru = find(u), rw = find(w);
        if (ru == rw) return false;
        if (size_[ru] < size_[rw]) std::swap(ru, rw);
        parent_[rw] = ru;
        size_[ru] += size_[rw];
        log_.emplace_back(rw, ru);
        return true;
    }

    std::size_t mark() const { return log_.size(); }

    void rollback(std::size_t mark) {
        while (log_.size() > mark) {
            auto [child, root] = log_.back();
            log_.pop_back();
            parent_[child] = child;
            size_[root] -= size_[child];
        }
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<std::pair<int, int>> log_;
};

class TreeColouringSearch {
public:
    TreeColouringSearch(const MultiGraph& g, int k, int interval)
        : g_(g), k_(k), len_(interval) {
        std::vector<int> degrees(g.order());
        for (int v = 0; v < g.order(); ++v) degrees[v] = g.degree(v);
        order_ = degree_order(degrees);
        forests_.assign(k_, ForestTracker(g.order()));
        incidence_.assign(g.order(), {});
        for (int v = 0; v < g.order(); ++v)
            for (int u : g.neighbours(v).to_vector())
                incidence_[v].emplace_back(u, g.multiplicity(v, u));
    }

    std::optional<std::vector<int>> run() {
        colour_.assign(g_.order(), -1);
        if (extend(0)) return colour_;
        return std::nullopt;
    }

private:
    bool extend(int depth) {
        if (depth == g_.order()) return true;
        int v = order_[depth];
        int limit = depth == 0 ? 1 : k_;
        for (int c = 0; c < limit; ++c) {
            std::vector<std::size_t> marks(len_);
            for (int t = 0; t < len_; ++t) marks[t] = forests_[interval_index(c, t)].mark();
            colour_[v] = c;
            if (place(v, c, marks)) {
                if (extend(depth + 1)) return true;
                for (int t = 0; t < len_; ++t)
                    forests_[interval_index(c, t)].rollback(marks[t]);
            }
            colour_[v] = -1;
        }
        return false;
    }

    int interval_index(int c, int t) const { return ((c - t) % k_ + k_) % k_; }

    bool in_interval(int colour, int start) const {
        return ((colour - start) % k_ + k_) % k_ < len_;
    }

    bool place(int v, int c, const std::vector<std::size_t>& marks) {
        for (int t = 0; t < len_; ++t) {
            int i = interval_index(c, t);
            for (auto [u, mult] : incidence_[v]) {
                if (colour_[u] < 0 || u == v || !in_interval(colour_[u], i)) continue;
                if (mult >= 2 || !forests_[i].link(v, u)) {
                    for (int back = 0; back <= t; ++back)
                        forests_[interval_index(c, back)].rollback(marks[back]);
                    return false;
                }
            }
        }
        return true;
    }

    const MultiGraph& g_;
    int k_, len_;
    std::vector<int> order_;
    std::vector<int> colour_;
    std::vector<ForestTracker> forests_;
    std::vector<std::vector<std::pair<int, int>>> incidence_;
};

class BTupleSearch {
public:
    BTupleSearch(const MultiDigraph& d, int k, int b) : d_(d), k_(k), b_(b) {
        std::vector<int> degrees(d.order());
        for (int v = 0; v < d.order(); ++v) degrees[v] = d.degree(v);
        order_ = degree_order(degrees);
        classes_.assign(k_ + 1, VertexSet(d.order()));
        std::vector<int> tuple(b_);
        std::iota(tuple.begin(), tuple.end(), 1);
        // All size-b subsets of {1..k} in lexicographic order.
        while (true) {
            tuples_.push_back(tuple);
            int pos = b_ - 1;
            while (pos >= 0 && tuple[pos] == k_ - (b_ - 1 - pos)) --pos;
            if (pos < 0) break;
            ++tuple[pos];
            for (int j = pos + 1; j < b_; ++j) tuple[j] = tuple[j - 1] + 1;
        }
    }

    std::optional<std::vector<std::vector<int>>> run() {
        choice_.assign(d_.order(), -1);
        if (extend(0)) {
            std::vector<std::vector<int>> result(d_.order());
            for (int v = 0; v < d_.order(); ++v) result[v] = tuples_[choice_[v]];
            return result;
        }
        return std::nullopt;
    }

private:
    bool extend(int depth) {
        if (depth == d_.order()) return true;
        int v = order_[depth];
        std::size_t limit = depth == 0 ? 1 : tuples_.size();
        for (std::size_t idx = 0; idx < limit; ++idx) {
            if (place(v, tuples_[idx])) {
                choice_[v] = static_cast<int>(idx);
                if (extend(depth + 1)) return true;
                choice_[v] = -1;
            }
        }
        return false;
    }

    bool place(int v, const std::vector<int>& tuple) {
        for (std::size_t j = 0; j < tuple.size(); ++j) {
            classes_[tuple[j]].set(v);
            if (!is_acyclic(d_, classes_[tuple[j]])) {
                for (std::size_t back = 0; back <= j; ++back) classes_[tuple[back]].reset(v);
                return false;
            }
        }
        return true;
    }

    const MultiDigraph& d_;
    int k_, b_;
    std::vector<int> order_;
    std::vector<int> choice_;
    std::vector<VertexSet> classes_;
    std::vector<std::vector<int>> tuples_;
};

} // namespace

std::optional<Colouring> decide_dichromatic(const MultiDigraph& d, int k) {
    if (k < 1) throw InputError("require k >= 1");
    auto colours = IntervalColouringSearch(d, k, 1).run();
    if (!colours) return std::nullopt;
    return Colouring{ColouringKind::dichromatic, k, 1, std::move(*colours), {}};
}

std::optional<Colouring> decide_star(const MultiDigraph& d, int k, int interval) {
    check_kd(k, interval);
    auto colours = IntervalColouringSearch(d, k, interval).run();
    if (!colours) return std::nullopt;
    return Colouring{ColouringKind::acyclic_kd, k, interval, std::move(*colours), {}};
}

std::optional<VertexMap> decide_circular(const MultiDigraph& d, int k, int interval) {
    check_kd(k, interval);
    return find_hom(HomKind::acyclic, d, circulant_digraph(k, interval));
}

std::optional<Colouring> decide_tree(const MultiGraph& g, int k, int interval) {
    check_kd(k, interval);
    auto colours = TreeColouringSearch(g, k, interval).run();
    if (!colours) return std::nullopt;
    return Colouring{ColouringKind::tree_kd, k, interval, std::move(*colours), {}};
}

std::optional<Colouring> decide_b_tuple(const MultiDigraph& d, int k, int b) {
    check_kd(k, b);
    auto tuples = BTupleSearch(d, k, b).run();
    if (!tuples) return std::nullopt;
    return Colouring{ColouringKind::b_tuple, k, b, {}, std::move(*tuples)};
}

std::string to_string(ParamName name) {
    switch (name) {
        case ParamName::dichromatic: return "dichromatic";
        case ParamName::circular_dichromatic: return "circular-dichromatic";
        case ParamName::star_dichromatic: return "star-dichromatic";
        case ParamName::fractional_dichromatic: return "fractional-dichromatic";
        case ParamName::vertex_arboricity: return "vertex-arboricity";
        case ParamName::circular_vertex_arboricity: return "circular-vertex-arboricity";
    }
    throw InputError("unknown parameter name");
}

std::optional<ParamName> param_name_from_string(const std::string& text) {
    if (text == "dichromatic") return ParamName::dichromatic;
    if (text == "circular-dichromatic") return ParamName::circular_dichromatic;
    if (text == "star-dichromatic") return ParamName::star_dichromatic;
    if (text == "fractional-dichromatic") return ParamName::fractional_dichromatic;
    if (text == "vertex-arboricity") return ParamName::vertex_arboricity;
    if (text == "circular-vertex-arboricity") return ParamName::circular_vertex_arboricity;
    return std::nullopt;
}

std::vector<KdPair> ascending_reduced_ratios(int max_numerator) {
    std::vector<KdPair> ratios;
    for (int k = 1; k <= max_numerator; ++k)
        for (int d = 1; d <= k; ++d)
            if (std::gcd(k, d) == 1) ratios.push_back({k, d});
    std::sort(ratios.begin(), ratios.end(), [](const KdPair& a, const KdPair& b) {
        return static_cast<long long>(a.k) * b.d < static_cast<long long>(b.k) * a.d;
    });
    return ratios;
}

namespace {

Colouring empty_witness(ColouringKind kind) { return Colouring{kind, 1, 1, {}, {}}; }

template <typename Decide>
ParamResult integer_param_search(ColouringKind kind, int order, Decide&& decide) {
    if (order == 0) return {Rational(1), empty_witness(kind), std::nullopt};
    for (int k = 1;; ++k) {
        if (auto witness = decide(k))
            return {Rational(k), std::move(witness),
                    k > 1 ? std::optional<Rational>(Rational(k - 1)) : std::nullopt};
        if (k > order) throw std::logic_error("integer parameter exceeded the vertex count");
    }
}

template <typename Decide>
ParamResult ratio_param_search(ColouringKind kind, int order, Decide&& decide) {
    if (order == 0) return {Rational(1), empty_witness(kind), std::nullopt};
    std::optional<Rational> rejected;
    for (const auto& [k, d] : ascending_reduced_ratios(order)) {
        if (auto witness = decide(k, d))
            return {Rational(k, d), std::move(witness), rejected};
        rejected = Rational(k, d);
    }
    throw std::logic_error("ratio search exhausted all candidates up to |V|/1");
}

} // namespace

ParamResult compute_param(ParamName name, const MultiDigraph& d) {
    switch (name) {
        case ParamName::dichromatic:
            return integer_param_search(ColouringKind::dichromatic, d.order(),
                                        [&](int k) { return decide_dichromatic(d, k); });
        case ParamName::star_dichromatic:
            return ratio_param_search(ColouringKind::acyclic_kd, d.order(),
                                      [&](int k, int dd) { return decide_star(d, k, dd); });
        case ParamName::circular_dichromatic:
            return ratio_param_search(
                ColouringKind::circular_kd, d.order(),
                [&](int k, int dd) -> std::optional<Colouring> {
                    auto hom = decide_circular(d, k, dd);
                    if (!hom) return std::nullopt;
                    return Colouring{ColouringKind::circular_kd, k, dd, std::move(hom->map), {}};
                });
        case ParamName::fractional_dichromatic:
            throw InputError("the fractional parameter is computed by chi_f");
        case ParamName::vertex_arboricity:
        case ParamName::circular_vertex_arboricity:
            throw InputError("arboricity parameters expect a graph input");
    }
    throw InputError("unknown parameter name");
}

ParamResult compute_param(ParamName name, const MultiGraph& g) {
    switch (name) {
        case ParamName::vertex_arboricity:
            return integer_param_search(ColouringKind::tree_kd, g.order(),
                                        [&](int k) { return decide_tree(g, k, 1); });
        case ParamName::circular_vertex_arboricity:
            return ratio_param_search(ColouringKind::tree_kd, g.order(),
                                      [&](int k, int dd) { return decide_tree(g, k, dd); });
        default:
            throw InputError("parameter " + to_string(name) + " expects a digraph input");
    }
}

} // namespace dichroma
