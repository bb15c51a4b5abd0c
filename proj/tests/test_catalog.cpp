#include <doctest.h>

#include <set>

#include "stressfree/catalog.hpp"
#include "stressfree/minors.hpp"
#include "stressfree/rigidity.hpp"

using namespace sf;

namespace {

int girth(const Graph& g) {
    // shortest cycle by BFS from every vertex
    int best = 1 << 20;
    for (int s = 1; s <= g.vertex_count(); ++s) {
        std::vector<int> dist(g.vertex_count() + 1, -1), parent(g.vertex_count() + 1, 0);
        dist[s] = 0;
        std::vector<int> queue{s};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if (w != parent[v]) {
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

}  // namespace

TEST_CASE("catalog_get resolves fixed and parametric names") {
    CHECK(catalog_get("K5") == complete_graph(5));
    CHECK(catalog_get("K3,3") == complete_multipartite({3, 3}));
    CHECK(catalog_get("C5") == cycle_graph(5));
    CHECK(catalog_get("P4") == path_graph(4));
    CHECK(catalog_get("W5") == wheel_graph(5));
    CHECK(catalog_get("cone:K5") == complete_graph(6));
    CHECK(catalog_get("stacked:8:3") == random_planar_triangulation(8, 3));
    CHECK(catalog_get("octahedron") == complete_multipartite({2, 2, 2}));
    CHECK_THROWS_AS(catalog_get("no_such_graph"), std::invalid_argument);
    CHECK_THROWS_AS(catalog_get("K"), std::invalid_argument);
    CHECK(catalog_has("petersen"));
    CHECK_FALSE(catalog_has("Q17"));
}

TEST_CASE("catalog entry shapes") {
    Graph k22222 = catalog_get("K2,2,2,2,2");
    CHECK(k22222.vertex_count() == 10);
    CHECK(k22222.edge_count() == 40);

    Graph ico = catalog_get("icosahedron");
    CHECK(ico.vertex_count() == 12);
    CHECK(ico.edge_count() == 30);
    for (int v = 1; v <= 12; ++v) CHECK(ico.degree(v) == 5);
    for (auto e : ico.edges()) CHECK(triangles_through_edge(ico, e) == 2);

    Graph oct = catalog_get("octahedron");
    CHECK(oct.vertex_count() == 6);
    CHECK(oct.edge_count() == 12);
    for (int v = 1; v <= 6; ++v) CHECK(oct.degree(v) == 4);

    Graph w4 = catalog_get("W4");
    CHECK(w4.vertex_count() == 5);
    CHECK(w4.edge_count() == 8);

    Graph pet = catalog_get("petersen");
    CHECK(pet.vertex_count() == 10);
    CHECK(pet.edge_count() == 15);
    for (int v = 1; v <= 10; ++v) CHECK(pet.degree(v) == 3);
    CHECK(girth(pet) == 5);

    Graph k7e = catalog_get("K7-e");
    CHECK(k7e.vertex_count() == 7);
    CHECK(k7e.edge_count() == 20);
}

TEST_CASE("torus triangulation invariants") {
    Graph f1 = catalog_get("figure1_torus");
    CHECK(f1.vertex_count() == 10);
    CHECK(f1.edge_count() == 30);  // = 3n, as a torus triangulation must have
    // irreducible: every edge lies in at least 3 triangles
    for (auto e : f1.edges()) CHECK(triangles_through_edge(f1, e) >= 3);
    CHECK(is_connected(f1));
    CHECK(has_minor(f1, complete_graph(5)).has_value());
    CHECK_FALSE(has_minor(f1, complete_graph(6)).has_value());
    CHECK(is_linkless(f1).linkless);
    auto rep = analyze_rigidity(f1, 4);
    CHECK(rep.rank == 30);
    CHECK(rep.stress_dim == 0);
    CHECK(rep.is_rigid);
}

TEST_CASE("stacked sphere generator") {
    CHECK(random_planar_triangulation(4, 9) == complete_graph(4));
    CHECK(random_planar_triangulation(5, 0).edge_count() == 9);
    for (uint64_t seed = 0; seed < 8; ++seed) {
        int n = 5 + static_cast<int>(seed);
        Graph g = random_planar_triangulation(n, seed);
        CHECK(g.edge_count() == 3 * n - 6);
        CHECK(is_connected(g));
        for (auto e : g.edges()) CHECK(triangles_through_edge(g, e) >= 2);
        CHECK(g == random_planar_triangulation(n, seed));  // deterministic
    }
    CHECK(random_planar_triangulation(12, 1) != random_planar_triangulation(12, 2));
    CHECK_THROWS_AS(random_planar_triangulation(3, 1), std::invalid_argument);
}

TEST_CASE("cone generator") {
    Graph c = cone_over(cycle_graph(4));
    CHECK(c == wheel_graph(4));
    CHECK(cone_over(Graph(0, {})) == complete_graph(1));
}

TEST_CASE("entries are unique and tagged consistently") {
    std::set<std::string> names;
    for (const auto& e : catalog_entries()) {
        CHECK(names.insert(e.name).second);
        CHECK_FALSE(e.provenance.empty());
    }
    CHECK(names.count("K6"));
    CHECK(names.count("figure1_torus"));
    CHECK(names.count("K2,2,2,2,2"));
    CHECK(names.count("icosahedron"));
    for (int i = 1; i <= 7; ++i)
        CHECK(names.count("petersen_family_" + std::to_string(i)));
}

TEST_CASE("tag validation") {
    for (const auto& e : catalog_entries()) {
        for (const auto& tag : e.tags) {
            if (tag == "planar") {
                if (e.graph.vertex_count() >= 3)
                    CHECK(e.graph.edge_count() <= 3 * e.graph.vertex_count() - 6);
                CHECK_FALSE(has_minor(e.graph, complete_graph(5)).has_value());
            } else if (tag == "linkless") {
                CHECK(is_linkless(e.graph).linkless);
            } else if (tag == "family") {
                bool member = false;
                for (const auto& f : petersen_family())
                    member = member || are_isomorphic(e.graph, f);
                CHECK(member);
            } else if (tag == "torus") {
                CHECK(e.graph.edge_count() == 3 * e.graph.vertex_count());
            } else if (tag == "counterexample") {
                CHECK_FALSE(has_minor(e.graph, complete_graph(8)).has_value());
                CHECK(analyze_rigidity(e.graph, 6).stress_dim >= 1);
            } else {
                FAIL("unknown tag ", tag);
            }
        }
    }
}

TEST_CASE("petersen family entries cross-match the closure") {
    const auto& fam = petersen_family();
    for (size_t i = 0; i < fam.size(); ++i)
        CHECK(catalog_get("petersen_family_" + std::to_string(i + 1)) == fam[i]);
}
