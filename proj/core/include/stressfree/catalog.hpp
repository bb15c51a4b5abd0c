#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stressfree/graph.hpp"

namespace sf {

struct CatalogEntry {
    std::string name;
    Graph graph;
    std::vector<std::string> tags;  // planar, linkless, torus, family, counterexample
    std::string provenance;
};

// Fixed named graphs. catalog_get also resolves parametric names:
//   K<n>            complete graph
//   K<a>,<b>,...    complete multipartite (consecutive label blocks)
//   C<n> P<n> W<n>  cycle, path, wheel (rim n plus hub n+1)
//   stacked:<n>[:<seed>]  stacked-sphere triangulation
//   cone:<name>     apex joined to every vertex of <name>
const std::vector<CatalogEntry>& catalog_entries();
Graph catalog_get(const std::string& name);
bool catalog_has(const std::string& name);

Graph complete_graph(int n);
Graph complete_multipartite(const std::vector<int>& parts);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph wheel_graph(int rim);
Graph octahedron();
Graph icosahedron();
Graph petersen_graph();
Graph k7_minus_edge();

// 10-vertex, 30-edge irreducible torus triangulation; the catalog's linkless
// non-planar example.
Graph figure1_torus();

Graph cone_over(const Graph& g);

// Stacked sphere: grow from K_4 by repeatedly picking a random facet of the
// current triangulation and joining a fresh vertex to its corners. Always a
// planar triangulation with 3n-6 edges.
Graph random_planar_triangulation(int n, uint64_t seed);

}  // namespace sf
