#ifndef DICHROMA_COLOURING_HPP
#define DICHROMA_COLOURING_HPP

#include <optional>
#include <string>
#include <vector>

#include "dichroma/families.hpp"
#include "dichroma/graph.hpp"
#include "dichroma/rational.hpp"

namespace dichroma {

enum class ColouringKind { dichromatic, circular_kd, acyclic_kd, tree_kd, b_tuple };

std::string to_string(ColouringKind kind);
ColouringKind colouring_kind_from_string(const std::string& text);

// Universal colouring certificate. Map kinds use `colours` (values in Z_k);
// the b-tuple kind uses `tuples` (size-d subsets of {1..k}, sorted). For the
// b-tuple kind `d` holds b.
struct Colouring {
    ColouringKind kind = ColouringKind::dichromatic;
    int k = 1;
    int d = 1;
    std::vector<int> colours;
    std::vector<std::vector<int>> tuples;

    friend bool operator==(const Colouring& a, const Colouring& b) {
        return a.kind == b.kind && a.k == b.k && a.d == b.d && a.colours == b.colours &&
               a.tuples == b.tuples;
    }
};

// True iff c satisfies its kind's definition exactly on the given input.
// Kind/input mismatches (tree colourings of digraphs and so on) raise
// InputError; out-of-range colour values make the colouring invalid.
bool validate_colouring(const MultiDigraph& d, const Colouring& c);
bool validate_colouring(const MultiGraph& g, const Colouring& c);

// k-colouring with no monochromatic directed cycle, or nullopt.
std::optional<Colouring> decide_dichromatic(const MultiDigraph& d, int k);

// Acyclic (k,d)-colouring: every cyclic d-interval of colours has an acyclic
// preimage. Exists iff the star dichromatic number is at most k/d.
std::optional<Colouring> decide_star(const MultiDigraph& d, int k, int interval);

// Acyclic homomorphism into the circulant digraph on (k,d), or nullopt.
// Exists iff the circular dichromatic number is at most k/d.
std::optional<VertexMap> decide_circular(const MultiDigraph& d, int k, int interval);

// (k,d)-tree-colouring: every cyclic d-interval's preimage induces a forest.
std::optional<Colouring> decide_tree(const MultiGraph& g, int k, int interval);

// Size-b colour sets per vertex with every colour's incidence class acyclic.
std::optional<Colouring> decide_b_tuple(const MultiDigraph& d, int k, int b);

enum class ParamName {
    dichromatic,
    circular_dichromatic,
    star_dichromatic,
    fractional_dichromatic,
    vertex_arboricity,
    circular_vertex_arboricity,
};

std::string to_string(ParamName name);
std::optional<ParamName> param_name_from_string(const std::string& text);

struct ParamResult {
    Rational value = 1;
    std::optional<Colouring> witness;
    // Largest candidate ratio below `value` that was rejected on the way up.
    std::optional<Rational> rejected_below;
};

// Exact parameter value by ascending feasibility search over reduced ratios
// k/d with numerator at most |V| (integer parameters walk k = 1, 2, ...).
// The fractional parameter lives in fractional.hpp; requesting it here
// raises InputError. The empty (di)graph has every parameter equal to 1.
ParamResult compute_param(ParamName name, const MultiDigraph& d);
ParamResult compute_param(ParamName name, const MultiGraph& g);

// All reduced ratios k/d with 1 <= d <= k <= max_numerator, ascending by
// value. Reduced fractions are pairwise distinct, so the order is total.
std::vector<KdPair> ascending_reduced_ratios(int max_numerator);

} // namespace dichroma

#endif
