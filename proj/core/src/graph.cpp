#include "stressfree/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sf {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    for (auto& [u, v] : edges_) {
        if (u == v) throw std::invalid_argument("Graph: loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 1 || v > n)
            throw std::invalid_argument("Graph: edge endpoint out of range 1..n");
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    adj_.assign(n, {});
    for (auto [u, v] : edges_) {
        adj_[u - 1].push_back(v);
        adj_[v - 1].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (!has_vertex(v)) throw std::invalid_argument("Graph: vertex out of range");
    return adj_[v - 1];
}

bool Graph::has_edge(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v) || u == v) return false;
    const auto& a = adj_[u - 1];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<int> common_neighbors(const Graph& g, Edge e) {
    auto [u, v] = make_edge(e.first, e.second);
    if (!g.has_edge(u, v))
        throw std::invalid_argument("common_neighbors: not an edge of the graph");
    const auto& a = g.neighbors(u);
    const auto& b = g.neighbors(v);
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::pair<Graph, EdgeContractionRecord> contract_edge(const Graph& g, Edge e) {
    auto [u, v] = make_edge(e.first, e.second);
    if (!g.has_edge(u, v))
        throw std::invalid_argument("contract_edge: not an edge of the graph");

    EdgeContractionRecord rec;
    rec.contracted_edge = {u, v};
    rec.surviving_label = u;
    rec.common_neighbor_count = static_cast<int>(common_neighbors(g, {u, v}).size());
    rec.relabeling.resize(g.vertex_count());
    for (int w = 1; w <= g.vertex_count(); ++w) {
        int image = (w == v) ? u : w;
        if (image > v) --image;
        rec.relabeling[w - 1] = image;
    }

    std::vector<Edge> new_edges;
    new_edges.reserve(g.edge_count());
    for (auto [a, b] : g.edges()) {
        int a2 = rec.relabeling[a - 1];
        int b2 = rec.relabeling[b - 1];
        if (a2 == b2) continue;  // the contracted edge itself
        new_edges.push_back(make_edge(a2, b2));
    }
    return {Graph(g.vertex_count() - 1, std::move(new_edges)), rec};
}

bool is_connected(const Graph& g) {
    return connected_components(g).size() <= 1;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 1; s <= n; ++s) {
        if (comp[s - 1] != -1) continue;
        std::vector<int> stack{s}, members;
        comp[s - 1] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w : g.neighbors(v)) {
                if (comp[w - 1] == -1) {
                    comp[w - 1] = comp[s - 1];
                    stack.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g,
                                                    std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::vector<int> new_label(g.vertex_count() + 1, 0);
    for (size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 1 || v > g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        new_label[v] = static_cast<int>(i) + 1;
    }
    std::vector<Edge> edges;
    for (auto [a, b] : g.edges())
        if (new_label[a] && new_label[b]) edges.push_back(make_edge(new_label[a], new_label[b]));
    return {Graph(static_cast<int>(vertices.size()), std::move(edges)), std::move(vertices)};
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    int n = g.vertex_count();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("relabel: permutation size mismatch");
    std::vector<char> hit(n + 1, 0);
    for (int p : perm) {
        if (p < 1 || p > n || hit[p]) throw std::invalid_argument("relabel: not a permutation");
        hit[p] = 1;
    }
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (auto [a, b] : g.edges()) edges.push_back(make_edge(perm[a - 1], perm[b - 1]));
    return Graph(n, std::move(edges));
}

Graph delete_low_degree_vertices(const Graph& g, int max_degree) {
    Graph cur = g;
    for (;;) {
        std::vector<int> keep;
        for (int v = 1; v <= cur.vertex_count(); ++v)
            if (cur.degree(v) > max_degree) keep.push_back(v);
        if (static_cast<int>(keep.size()) == cur.vertex_count()) return cur;
        cur = induced_subgraph(cur, keep).first;
        if (cur.vertex_count() == 0) return cur;
    }
}

namespace {

// Extends `current` (a clique, ascending) by vertices > current.back(),
// visiting size-k cliques in lexicographic order. Stops once `visit` accepts.
bool enumerate_cliques(const Graph& g, int k, std::vector<int>& current, int start,
                       const std::function<bool(const std::vector<int>&)>& visit) {
    if (static_cast<int>(current.size()) == k) return visit(current);
    for (int v = start; v <= g.vertex_count(); ++v) {
        bool ok = true;
        for (int u : current)
            if (!g.has_edge(u, v)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        current.push_back(v);
        if (enumerate_cliques(g, k, current, v + 1, visit)) return true;
        current.pop_back();
    }
    return false;
}

CliqueSeparation make_separation(const Graph& g, const std::vector<int>& clique,
                                 const std::vector<std::vector<int>>& parts) {
    // parts = components of g - clique; side1 is the part with the lowest label.
    size_t lead = 0;
    for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i].front() < parts[lead].front()) lead = i;

    CliqueSeparation sep;
    sep.clique = clique;
    sep.side1 = clique;
    sep.side1.insert(sep.side1.end(), parts[lead].begin(), parts[lead].end());
    sep.side2 = clique;
    for (size_t i = 0; i < parts.size(); ++i)
        if (i != lead) sep.side2.insert(sep.side2.end(), parts[i].begin(), parts[i].end());
    std::sort(sep.side1.begin(), sep.side1.end());
    std::sort(sep.side2.begin(), sep.side2.end());
    sep.g1 = induced_subgraph(g, sep.side1).first;
    sep.g2 = induced_subgraph(g, sep.side2).first;
    return sep;
}

std::vector<std::vector<int>> components_avoiding(const Graph& g,
                                                  const std::vector<int>& removed) {
    std::vector<char> banned(g.vertex_count() + 1, 0);
    for (int v : removed) banned[v] = 1;
    std::vector<char> seen(g.vertex_count() + 1, 0);
    std::vector<std::vector<int>> comps;
    for (int s = 1; s <= g.vertex_count(); ++s) {
        if (banned[s] || seen[s]) continue;
        std::vector<int> stack{s}, members;
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w : g.neighbors(v))
                if (!banned[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        comps.push_back(std::move(members));
    }
    return comps;
}

}  // namespace

std::optional<CliqueSeparation> find_clique_separator(const Graph& g, int kmax) {
    if (!is_connected(g))
        throw std::invalid_argument("find_clique_separator: graph must be connected");
    if (kmax < 0 || kmax > g.vertex_count())
        throw std::invalid_argument("find_clique_separator: kmax out of range");

    std::optional<CliqueSeparation> result;
    for (int k = 1; k <= kmax && !result; ++k) {
        std::vector<int> current;
        enumerate_cliques(g, k, current, 1, [&](const std::vector<int>& clique) {
            auto parts = components_avoiding(g, clique);
            if (parts.size() < 2) return false;
            result = make_separation(g, clique, parts);
            return true;
        });
    }
    return result;
}

CliqueSeparation split_disconnected(const Graph& g) {
    auto comps = connected_components(g);
    if (comps.size() < 2)
        throw std::invalid_argument("split_disconnected: graph is connected");
    return make_separation(g, {}, comps);
}

CliqueSeparation split_along_clique(const Graph& g, std::vector<int> clique) {
    std::sort(clique.begin(), clique.end());
    if (std::unique(clique.begin(), clique.end()) != clique.end())
        throw std::invalid_argument("split_along_clique: repeated clique vertex");
    for (int v : clique)
        if (!g.has_vertex(v))
            throw std::invalid_argument("split_along_clique: vertex out of range");
    for (size_t i = 0; i < clique.size(); ++i)
        for (size_t j = i + 1; j < clique.size(); ++j)
            if (!g.has_edge(clique[i], clique[j]))
                throw std::invalid_argument("split_along_clique: vertices are not a clique");
    auto parts = components_avoiding(g, clique);
    if (parts.size() < 2)
        throw std::invalid_argument("split_along_clique: clique does not separate");
    return make_separation(g, clique, parts);
}

bool is_shifted(const Graph& g) {
    for (auto [a, b] : g.edges())
        for (int a2 = 1; a2 <= a; ++a2)
            for (int b2 = a2 + 1; b2 <= b; ++b2)
                if (!g.has_edge(a2, b2)) return false;
    return true;
}

namespace {

bool extend_isomorphism(const Graph& a, const Graph& b, std::vector<int>& map,
                        std::vector<char>& used, int v) {
    int n = a.vertex_count();
    if (v > n) return true;
    for (int w = 1; w <= n; ++w) {
        if (used[w] || a.degree(v) != b.degree(w)) continue;
        bool ok = true;
        for (int u = 1; u < v && ok; ++u)
            if (a.has_edge(u, v) != b.has_edge(map[u - 1], w)) ok = false;
        if (!ok) continue;
        map[v - 1] = w;
        used[w] = 1;
        if (extend_isomorphism(a, b, map, used, v + 1)) return true;
        used[w] = 0;
    }
    return false;
}

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    int n = a.vertex_count();
    std::vector<int> da, db;
    for (int v = 1; v <= n; ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<int> map(n, 0);
    std::vector<char> used(n + 1, 0);
    return extend_isomorphism(a, b, map, used, 1);
}

Graph parse_edge_list(std::istream& in) {
    std::string line;
    std::vector<long long> tokens;
    while (std::getline(in, line)) {
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        long long x;
        while (ls >> x) tokens.push_back(x);
        std::string rest;
        ls.clear();
        if (ls >> rest && !rest.empty())
            throw std::invalid_argument("edge list: non-numeric token '" + rest + "'");
    }
    if (tokens.size() < 2) throw std::invalid_argument("edge list: missing 'n m' header");
    long long n = tokens[0], m = tokens[1];
    if (n < 0 || m < 0 || n > 1'000'000)
        throw std::invalid_argument("edge list: bad header counts");
    if (static_cast<long long>(tokens.size()) != 2 + 2 * m)
        throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                    " edge lines");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (long long i = 0; i < m; ++i) {
        long long u = tokens[2 + 2 * i], v = tokens[3 + 2 * i];
        if (u < 1 || v <= u || v > n)
            throw std::invalid_argument("edge list: edge must satisfy 1 <= u < v <= n");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    Graph g(static_cast<int>(n), std::move(edges));
    if (g.edge_count() != m) throw std::invalid_argument("edge list: duplicate edge");
    return g;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    return parse_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string graph_digest(const Graph& g) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : format_edge_list(g)) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace sf
