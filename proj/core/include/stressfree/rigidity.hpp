#pragma once

#include <cstdint>
#include <vector>

#include "stressfree/generic.hpp"
#include "stressfree/graph.hpp"
#include "stressfree/matrix.hpp"

namespace sf {

struct RigidityReport {
    int d = 0;
    int n = 0;
    int e = 0;
    int rank = 0;
    int stress_dim = 0;   // e - rank
    int target_rank = 0;  // rank of the complete graph on n vertices
    bool is_stress_free = false;
    bool is_rigid = false;
    std::vector<uint64_t> seeds;
    int trials = 0;
};

// dn x e matrix: the column of edge {u<v} carries f(u)-f(v) on u's coordinate
// rows and f(v)-f(u) on v's rows. Rows vertex-major, columns in edge order.
FieldMatrix rigidity_matrix(const Graph& g, const GenericConfiguration& cfg);

// Generic rank of the complete graph: d*n - d(d+1)/2 for n >= d+1, else
// n(n-1)/2 (a small complete graph is stress free, so rank = edge count).
int target_rank(int n, int d);

// Max-over-trials randomized rank; each trial is a lower bound on the generic
// rank and equals it with overwhelming probability. d >= 1 required.
RigidityReport analyze_rigidity(const Graph& g, int d, int trials = kDefaultTrials,
                                uint64_t base_seed = kDefaultSeed);

}  // namespace sf
