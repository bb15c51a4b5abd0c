#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "stressfree/generic.hpp"
#include "stressfree/graph.hpp"
#include "stressfree/matrix.hpp"

namespace sf {

enum class ShiftKind { exterior, symmetric };

const char* to_string(ShiftKind k);

// Result of shifting a graph: a shifted graph with the same number of edges,
// plus the randomness provenance needed to replay it.
struct ShiftedGraph {
    ShiftKind kind = ShiftKind::exterior;
    int n = 0;
    int vertices_kept = 0;  // size of the degree-1 part (all vertices survive)
    std::vector<Edge> edges;
    std::vector<uint64_t> seeds;
    int trials = 0;
    bool degenerate_flagged = false;  // a trial disagreed and was discarded

    Graph graph() const { return Graph(n, edges); }
};

// Sign of the interior product e_T |_ e_S for sorted index sets T subset of
// S: (-1)^a with a = #{(s,t) in S x T : s not in T, t < s}. Returns 0 when T
// is not a subset of S. The boundary matrix below is the d = 1 instance.
int interior_product_sign(const std::vector<int>& S, const std::vector<int>& T);

// dn x e matrix of the exterior boundary map: the column of edge {a<b} puts
// the coordinates of b on a's rows and minus the coordinates of a on b's
// rows. Requires cfg.n = n(g) and cfg.d = d.
FieldMatrix exterior_boundary_matrix(const Graph& g, int d,
                                     const GenericConfiguration& cfg);

// Kernel of the boundary map is zero, i.e. its rank equals the edge count.
bool is_d_acyclic(const Graph& g, int d, int trials = kDefaultTrials,
                  uint64_t base_seed = kDefaultSeed);

// Image of the boundary map equals the image for the complete graph on the
// same vertices (checked rank against rank, same configurations).
bool is_d_hyperconnected(const Graph& g, int d, int trials = kDefaultTrials,
                         uint64_t base_seed = kDefaultSeed);

ShiftedGraph exterior_shift(const Graph& g, int trials = kDefaultTrials,
                            uint64_t base_seed = kDefaultSeed);

ShiftedGraph symmetric_shift(const Graph& g, int trials = kDefaultTrials,
                             uint64_t base_seed = kDefaultSeed);

ShiftedGraph shift(const Graph& g, ShiftKind kind, int trials = kDefaultTrials,
                   uint64_t base_seed = kDefaultSeed);

// Order on degree-2 monomials y_a*y_b used when selecting the generic initial
// ideal: at the first index where the exponent vectors differ, the smaller
// monomial has the larger exponent. Equivalent to lexicographic order on the
// sorted index pairs.
bool gin_monomial_less(std::pair<int, int> a, std::pair<int, int> b);

// Least k such that {k, k+1} is not an edge; the chromatic number of a
// shifted graph (1 for edgeless). Throws if the graph is not shifted.
int chromatic_of_shifted(const Graph& g);
int chromatic_of_shifted(const ShiftedGraph& s);

// Picks the consensus edge set from per-seed results: index of the chosen
// result plus whether any disagreement was seen (lexicographically least
// among the results of maximal size). Exposed for direct testing.
std::pair<size_t, bool> combine_shift_trials(const std::vector<std::vector<Edge>>& results);

}  // namespace sf
