#pragma once

#include <random>
#include <vector>

#include "stressfree/graph.hpp"

namespace testutil {

// Erdos-Renyi G(n, p) with a local RNG; tests stay deterministic per seed.
inline sf::Graph random_graph(int n, double p, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<sf::Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return sf::Graph(n, std::move(edges));
}

inline sf::Graph random_connected_graph(int n, double p, uint64_t seed) {
    for (uint64_t attempt = 0;; ++attempt) {
        sf::Graph g = random_graph(n, p, seed + 7919 * attempt);
        if (sf::is_connected(g)) return g;
    }
}

inline std::vector<int> random_permutation(int n, uint64_t seed) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

inline sf::Graph random_tree(int n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<sf::Edge> edges;
    for (int v = 2; v <= n; ++v) {
        std::uniform_int_distribution<int> pick(1, v - 1);
        edges.push_back(sf::make_edge(pick(rng), v));
    }
    return sf::Graph(n, std::move(edges));
}

}  // namespace testutil
