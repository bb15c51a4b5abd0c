#include "stressfree/catalog.hpp"

#include <array>
#include <stdexcept>

#include "stressfree/generic.hpp"
#include "stressfree/minors.hpp"

namespace sf {

Graph complete_graph(int n) {
    if (n < 0) throw std::invalid_argument("complete_graph: negative order");
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph complete_multipartite(const std::vector<int>& parts) {
    int n = 0;
    std::vector<int> part_of;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1)
            throw std::invalid_argument("complete_multipartite: empty part");
        n += parts[i];
        part_of.insert(part_of.end(), parts[i], static_cast<int>(i));
    }
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (part_of[u - 1] != part_of[v - 1]) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    edges.push_back(make_edge(1, n));
    return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: need n >= 1");
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, std::move(edges));
}

Graph wheel_graph(int rim) {
    if (rim < 3) throw std::invalid_argument("wheel_graph: need rim >= 3");
    std::vector<Edge> edges = cycle_graph(rim).edges();
    for (int v = 1; v <= rim; ++v) edges.emplace_back(v, rim + 1);
    return Graph(rim + 1, std::move(edges));
}

Graph octahedron() { return complete_multipartite({2, 2, 2}); }

Graph icosahedron() {
    // Apex 1 over ring 2..6, apex 12 under ring 7..11.
    std::vector<Edge> edges;
    for (int v = 2; v <= 6; ++v) edges.emplace_back(1, v);
    for (int v = 7; v <= 11; ++v) edges.emplace_back(v, 12);
    for (int i = 0; i < 5; ++i) {
        edges.push_back(make_edge(2 + i, 2 + (i + 1) % 5));
        edges.push_back(make_edge(7 + i, 7 + (i + 1) % 5));
    }
    constexpr std::array<std::pair<int, int>, 10> cross{{{2, 7}, {2, 11}, {3, 7}, {3, 8},
                                                         {4, 8}, {4, 9}, {5, 9}, {5, 10},
                                                         {6, 10}, {6, 11}}};
    for (auto [u, v] : cross) edges.emplace_back(u, v);
    return Graph(12, std::move(edges));
}

Graph petersen_graph() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back(make_edge(1 + i, 1 + (i + 1) % 5));  // outer cycle
        edges.push_back(make_edge(6 + i, 6 + (i + 2) % 5));  // inner pentagram
        edges.emplace_back(1 + i, 6 + i);                    // spokes
    }
    return Graph(10, std::move(edges));
}

Graph k7_minus_edge() {
    std::vector<Edge> edges;
    for (int u = 1; u <= 7; ++u)
        for (int v = u + 1; v <= 7; ++v)
            if (!(u == 6 && v == 7)) edges.emplace_back(u, v);
    return Graph(7, std::move(edges));
}

Graph figure1_torus() {
    return Graph(10, {{1, 2}, {1, 3}, {1, 4}, {1, 5},  {2, 3}, {2, 4},  {2, 5},  {2, 6},
                      {2, 7}, {2, 9}, {2, 10}, {3, 4}, {3, 5}, {3, 7},  {3, 8},  {3, 9},
                      {3, 10}, {4, 5}, {4, 6}, {4, 7}, {4, 8}, {4, 10}, {5, 6},  {5, 8},
                      {5, 9}, {5, 10}, {6, 10}, {7, 10}, {8, 10}, {9, 10}});
}

Graph cone_over(const Graph& g) {
    int apex = g.vertex_count() + 1;
    std::vector<Edge> edges = g.edges();
    for (int v = 1; v < apex; ++v) edges.emplace_back(v, apex);
    return Graph(apex, std::move(edges));
}

Graph random_planar_triangulation(int n, uint64_t seed) {
    if (n < 4) throw std::invalid_argument("random_planar_triangulation: need n >= 4");
    std::vector<std::array<int, 3>> facets{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
    std::vector<Edge> edges = complete_graph(4).edges();
    for (int v = 5; v <= n; ++v) {
        auto pick = counter_random_u64(seed, static_cast<uint64_t>(v)) % facets.size();
        auto [a, b, c] = facets[pick];
        edges.emplace_back(a, v);
        edges.emplace_back(b, v);
        edges.emplace_back(c, v);
        facets[pick] = {a, b, v};
        facets.push_back({a, c, v});
        facets.push_back({b, c, v});
    }
    return Graph(n, std::move(edges));
}

namespace {

std::vector<CatalogEntry> build_entries() {
    std::vector<CatalogEntry> out;
    auto add = [&out](std::string name, Graph g, std::vector<std::string> tags,
                      std::string provenance) {
        out.push_back({std::move(name), std::move(g), std::move(tags),
                       std::move(provenance)});
    };

    for (int n = 1; n <= 10; ++n) {
        std::vector<std::string> tags;
        if (n <= 4) tags = {"planar", "linkless"};
        else if (n == 5) tags = {"linkless"};
        else if (n == 6) tags = {"family"};
        add("K" + std::to_string(n), complete_graph(n), tags, "complete graph");
    }
    add("K3,3", complete_multipartite({3, 3}), {"linkless"}, "complete bipartite");
    add("K2,2,2,2,2", complete_multipartite({2, 2, 2, 2, 2}), {"counterexample"},
        "complete 5-partite with parts of size 2");
    add("K7-e", k7_minus_edge(), {}, "K7 minus the edge {6,7}");
    add("octahedron", octahedron(), {"planar", "linkless"}, "K2,2,2");
    add("icosahedron", icosahedron(), {"planar", "linkless"},
        "5-regular planar triangulation on 12 vertices");
    for (int rim = 4; rim <= 6; ++rim)
        add("W" + std::to_string(rim), wheel_graph(rim), {"planar", "linkless"},
            "wheel: cycle plus hub");
    add("petersen", petersen_graph(), {"family"}, "Petersen graph");
    {
        const auto& family = petersen_family();
        for (size_t i = 0; i < family.size(); ++i)
            add("petersen_family_" + std::to_string(i + 1), family[i], {"family"},
                "delta-wye closure of K6, member " + std::to_string(i + 1));
    }
    add("figure1_torus", figure1_torus(), {"torus", "linkless"},
        "irreducible 10-vertex torus triangulation, the linkless one");
    add("stacked_sphere_10", random_planar_triangulation(10, 1),
        {"planar", "linkless"}, "stacked sphere, n=10, seed 1");
    add("stacked_sphere_12", random_planar_triangulation(12, 2),
        {"planar", "linkless"}, "stacked sphere, n=12, seed 2");
    return out;
}

bool parse_int_list(const std::string& s, char sep, std::vector<int>& out) {
    out.clear();
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find(sep, pos);
        std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            return false;
        if (tok.size() > 7) return false;
        out.push_back(std::stoi(tok));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return !out.empty();
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = build_entries();
    return entries;
}

Graph catalog_get(const std::string& name) {
    for (const auto& e : catalog_entries())
        if (e.name == name) return e.graph;

    std::vector<int> nums;
    if (name.size() > 1 && name[0] == 'K' && parse_int_list(name.substr(1), ',', nums)) {
        if (nums.size() == 1) return complete_graph(nums[0]);
        return complete_multipartite(nums);
    }
    if (name.size() > 1 && name[0] == 'C' && parse_int_list(name.substr(1), ',', nums) &&
        nums.size() == 1)
        return cycle_graph(nums[0]);
    if (name.size() > 1 && name[0] == 'P' && parse_int_list(name.substr(1), ',', nums) &&
        nums.size() == 1)
        return path_graph(nums[0]);
    if (name.size() > 1 && name[0] == 'W' && parse_int_list(name.substr(1), ',', nums) &&
        nums.size() == 1)
        return wheel_graph(nums[0]);
    if (name.rfind("stacked:", 0) == 0) {
        if (parse_int_list(name.substr(8), ':', nums) &&
            (nums.size() == 1 || nums.size() == 2))
            return random_planar_triangulation(nums[0],
                                               nums.size() == 2 ? nums[1] : 1);
    }
    if (name.rfind("cone:", 0) == 0) return cone_over(catalog_get(name.substr(5)));

    throw std::invalid_argument("unknown catalog graph: " + name);
}

bool catalog_has(const std::string& name) {
    try {
        catalog_get(name);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

}  // namespace sf
