#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "stressfree/graph.hpp"

namespace sf {

// A realized minor: one branch set per pattern vertex. Branch sets are
// nonempty, pairwise disjoint and connected in the host, and every pattern
// edge is covered by a host edge between the corresponding sets.
struct MinorWitness {
    int host_n = 0;
    Graph pattern;
    std::vector<std::vector<int>> branch_sets;  // index k for pattern vertex k+1
};

// Raised when the backtracking search exceeds its node budget; turns runaway
// searches into an explicit error instead of silent failure.
class MinorSearchBudget : public std::runtime_error {
public:
    explicit MinorSearchBudget(uint64_t budget)
        : std::runtime_error("minor search exceeded node budget of " +
                             std::to_string(budget)) {}
};

// Exhaustive backtracking search for pattern as a minor of host (host up to
// 64 vertices). Pattern vertices are assigned in descending-degree order;
// prunes on remaining-vertex counts and free-neighbor counts.
std::optional<MinorWitness> has_minor(const Graph& host, const Graph& pattern,
                                      uint64_t node_budget = 100'000'000);

// Checks every witness invariant directly; independent of the search code.
bool verify_minor_witness(const Graph& host, const Graph& pattern,
                          const MinorWitness& w);

// Replaces triangle {a,b,c} by a new degree-3 vertex.
Graph delta_y(const Graph& g, int a, int b, int c);

// Replaces degree-3 vertex w by a triangle on its neighbors; nullopt when a
// triangle edge already exists (the result would have a parallel edge).
std::optional<Graph> y_delta(const Graph& g, int w);

// The delta-wye closure of K_6: exactly 7 graphs, each with 15 edges,
// deduplicated up to isomorphism and sorted by (n, edge list).
const std::vector<Graph>& petersen_family();

struct LinklessReport {
    bool linkless = false;
    std::optional<MinorWitness> obstruction;
    int family_index = -1;  // index into petersen_family() when obstructed
};

// Linklessly embeddable iff no member of the Petersen family is a minor.
LinklessReport is_linkless(const Graph& g);

// Edge bound for K_r-minor-free graphs, 3 <= r <= 7: (r-2)n - (r-1)(r-2)/2.
long long mader_bound(int r, long long n);
bool check_mader(const Graph& g, int r);

// For a graph whose every edge lies in at least r-2 triangles (3 <= r <= 6,
// at least one edge): a K_r witness for r <= 5; for r = 6 either a K_6
// witness or a clique-sum split over a clique of size <= 4.
std::variant<MinorWitness, CliqueSeparation> triangle_saturated_minor(const Graph& g,
                                                                      int r);

}  // namespace sf
