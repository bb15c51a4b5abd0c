#include "stressfree/minors.hpp"

#include <algorithm>
#include <bit>

namespace sf {

namespace {

uint64_t bit(int v) { return uint64_t{1} << (v - 1); }

struct MinorSearch {
    const Graph& host;
    const Graph& pattern;
    int n, h;
    uint64_t full = 0;
    std::vector<uint64_t> adj;            // host adjacency masks, adj[v-1]
    std::vector<int> order;               // pattern labels in assignment order
    std::vector<std::vector<int>> earlier;  // positions j < k that must touch k
    std::vector<int> later_need;          // # pattern neighbors placed after k
    std::vector<uint64_t> sets;           // branch set per position
    std::vector<uint64_t> set_nbrs;       // neighborhood mask per position
    uint64_t used = 0;
    uint64_t allowed = 0;  // growth region for the branch set being built
    uint64_t budget;
    uint64_t initial_budget;
    bool complete_pattern = false;
    std::vector<int> roots;  // root (minimum) vertex of each placed branch set

    MinorSearch(const Graph& g, const Graph& p, uint64_t node_budget)
        : host(g), pattern(p), n(g.vertex_count()), h(p.vertex_count()),
          budget(node_budget), initial_budget(node_budget) {
        complete_pattern = p.edge_count() == h * (h - 1) / 2;
        full = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
        adj.assign(n, 0);
        for (auto [u, v] : g.edges()) {
            adj[u - 1] |= bit(v);
            adj[v - 1] |= bit(u);
        }
        order.resize(h);
        for (int v = 1; v <= h; ++v) order[v - 1] = v;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (p.degree(a) != p.degree(b)) return p.degree(a) > p.degree(b);
            return a < b;
        });
        std::vector<int> pos(h + 1, 0);
        for (int k = 0; k < h; ++k) pos[order[k]] = k;
        earlier.resize(h);
        later_need.assign(h, 0);
        for (int k = 0; k < h; ++k)
            for (int w : p.neighbors(order[k])) {
                if (pos[w] < k) earlier[k].push_back(pos[w]);
                if (pos[w] > k) ++later_need[k];
            }
        sets.assign(h, 0);
        set_nbrs.assign(h, 0);
        roots.assign(h, 0);
    }

    void spend() {
        if (budget == 0) throw MinorSearchBudget(initial_budget);
        --budget;
    }

    uint64_t flood(uint64_t start, uint64_t region) const {
        uint64_t comp = start, frontier = start;
        while (frontier) {
            uint64_t next = 0;
            while (frontier) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                next |= adj[v] & region & ~comp;
            }
            comp |= next;
            frontier = next;
        }
        return comp;
    }

    bool assign(int k) {
        spend();
        if (k == h) return true;
        uint64_t free = full & ~used;
        if (std::popcount(free) < h - k) return false;
        uint64_t candidates = free;
        // Branch sets of a complete pattern are interchangeable; forcing the
        // roots to ascend removes an h! symmetry factor.
        if (complete_pattern && k > 0) {
            int prev = roots[k - 1];
            candidates = prev >= 63 ? 0 : candidates & ~((uint64_t{2} << prev) - 1);
        }
        for (uint64_t rs = candidates; rs;) {
            int r = std::countr_zero(rs);
            rs &= rs - 1;
            // Canonical representative: the branch set's minimum vertex is its
            // root, so the set may not use smaller free vertices.
            uint64_t region = free & ~(bit(r + 1) - 1);
            allowed = flood(bit(r + 1), region);
            bool feasible = true;
            for (int j : earlier[k])
                if (!(set_nbrs[j] & allowed)) {
                    feasible = false;
                    break;
                }
            if (!feasible) continue;
            roots[k] = r;
            if (grow(k, bit(r + 1), adj[r], adj[r] & allowed, 0)) return true;
        }
        return false;
    }

    bool grow(int k, uint64_t B, uint64_t nbrB, uint64_t cand, uint64_t banned) {
        spend();
        bool complete = true;
        for (int j : earlier[k])
            if (!(nbrB & sets[j])) {
                complete = false;
                break;
            }
        if (complete) {
            uint64_t free_after = full & ~used & ~B;
            if (std::popcount(nbrB & free_after) >= later_need[k]) {
                sets[k] = B;
                set_nbrs[k] = nbrB;
                used |= B;
                if (assign(k + 1)) return true;
                used &= ~B;
            }
        }
        // Leave at least one free vertex for every unassigned pattern vertex.
        if (std::popcount(full & ~used & ~B) <= h - k - 1) return false;
        uint64_t local_banned = banned;
        for (uint64_t cs = cand & ~banned; cs;) {
            int c = std::countr_zero(cs);
            cs &= cs - 1;
            uint64_t cbit = bit(c + 1);
            uint64_t newB = B | cbit;
            uint64_t new_cand = (cand | (adj[c] & allowed)) & ~newB & ~local_banned;
            if (grow(k, newB, nbrB | adj[c], new_cand, local_banned)) return true;
            local_banned |= cbit;
        }
        return false;
    }
};

}  // namespace

std::optional<MinorWitness> has_minor(const Graph& host, const Graph& pattern,
                                      uint64_t node_budget) {
    if (host.vertex_count() > 64)
        throw std::invalid_argument("has_minor: hosts above 64 vertices unsupported");
    if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
    if (pattern.edge_count() > host.edge_count()) return std::nullopt;

    MinorWitness w;
    w.host_n = host.vertex_count();
    w.pattern = pattern;
    w.branch_sets.assign(pattern.vertex_count(), {});
    if (pattern.vertex_count() == 0) return w;

    MinorSearch search(host, pattern, node_budget);
    if (!search.assign(0)) return std::nullopt;
    for (int k = 0; k < search.h; ++k) {
        std::vector<int> members;
        for (uint64_t m = search.sets[k]; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            members.push_back(v + 1);
        }
        w.branch_sets[search.order[k] - 1] = std::move(members);
    }
    return w;
}

bool verify_minor_witness(const Graph& host, const Graph& pattern,
                          const MinorWitness& w) {
    if (w.host_n != host.vertex_count()) return false;
    if (w.pattern != pattern) return false;
    if (static_cast<int>(w.branch_sets.size()) != pattern.vertex_count()) return false;

    std::vector<int> owner(host.vertex_count() + 1, 0);
    for (size_t k = 0; k < w.branch_sets.size(); ++k) {
        const auto& set = w.branch_sets[k];
        if (set.empty()) return false;
        for (int v : set) {
            if (v < 1 || v > host.vertex_count()) return false;
            if (owner[v]) return false;  // overlap or duplicate
            owner[v] = static_cast<int>(k) + 1;
        }
        // Connectivity within the set.
        std::vector<int> stack{set[0]};
        std::vector<char> seen(host.vertex_count() + 1, 0);
        seen[set[0]] = 1;
        int reached = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++reached;
            for (int u : host.neighbors(v))
                if (owner[u] == static_cast<int>(k) + 1 && !seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        if (reached != static_cast<int>(set.size())) return false;
    }

    for (auto [a, b] : pattern.edges()) {
        bool covered = false;
        for (int v : w.branch_sets[a - 1]) {
            for (int u : host.neighbors(v))
                if (owner[u] == b) {
                    covered = true;
                    break;
                }
            if (covered) break;
        }
        if (!covered) return false;
    }
    return true;
}

Graph delta_y(const Graph& g, int a, int b, int c) {
    if (!(g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c)))
        throw std::invalid_argument("delta_y: vertices do not form a triangle");
    int w = g.vertex_count() + 1;
    std::vector<Edge> edges;
    for (auto e : g.edges())
        if (e != make_edge(a, b) && e != make_edge(a, c) && e != make_edge(b, c))
            edges.push_back(e);
    edges.push_back(make_edge(a, w));
    edges.push_back(make_edge(b, w));
    edges.push_back(make_edge(c, w));
    return Graph(w, std::move(edges));
}

std::optional<Graph> y_delta(const Graph& g, int w) {
    if (g.degree(w) != 3) throw std::invalid_argument("y_delta: vertex degree must be 3");
    auto nb = g.neighbors(w);
    int a = nb[0], b = nb[1], c = nb[2];
    if (g.has_edge(a, b) || g.has_edge(a, c) || g.has_edge(b, c)) return std::nullopt;
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (u != w && v != w) edges.push_back({u, v});
    edges.push_back(make_edge(a, b));
    edges.push_back(make_edge(a, c));
    edges.push_back(make_edge(b, c));
    Graph with_triangle(g.vertex_count(), std::move(edges));
    std::vector<int> keep;
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (v != w) keep.push_back(v);
    return induced_subgraph(with_triangle, keep).first;
}

namespace {

std::vector<Graph> build_petersen_family() {
    std::vector<Edge> k6_edges;
    for (int u = 1; u <= 6; ++u)
        for (int v = u + 1; v <= 6; ++v) k6_edges.emplace_back(u, v);
    Graph k6(6, std::move(k6_edges));

    std::vector<Graph> family{k6};
    std::vector<size_t> work{0};
    auto add_if_new = [&](const Graph& g) {
        if (g.vertex_count() > 10)
            throw std::logic_error("petersen_family: closure escaped 10 vertices");
        for (const auto& f : family)
            if (are_isomorphic(f, g)) return;
        family.push_back(g);
        work.push_back(family.size() - 1);
    };

    while (!work.empty()) {
        Graph g = family[work.back()];
        work.pop_back();
        for (auto [a, b] : g.edges())
            for (int c : common_neighbors(g, {a, b}))
                if (c > b) add_if_new(delta_y(g, a, b, c));
        for (int v = 1; v <= g.vertex_count(); ++v)
            if (g.degree(v) == 3)
                if (auto r = y_delta(g, v)) add_if_new(*r);
    }

    if (family.size() != 7)
        throw std::logic_error("petersen_family: closure size is not 7");
    for (const auto& g : family)
        if (g.edge_count() != 15)
            throw std::logic_error("petersen_family: member without 15 edges");
    std::sort(family.begin(), family.end(), [](const Graph& a, const Graph& b) {
        if (a.vertex_count() != b.vertex_count())
            return a.vertex_count() < b.vertex_count();
        return format_edge_list(a) < format_edge_list(b);
    });
    return family;
}

}  // namespace

const std::vector<Graph>& petersen_family() {
    static const std::vector<Graph> family = build_petersen_family();
    return family;
}

LinklessReport is_linkless(const Graph& g) {
    const auto& family = petersen_family();
    for (size_t i = 0; i < family.size(); ++i) {
        if (auto w = has_minor(g, family[i])) {
            LinklessReport rep;
            rep.linkless = false;
            rep.obstruction = std::move(w);
            rep.family_index = static_cast<int>(i);
            return rep;
        }
    }
    LinklessReport rep;
    rep.linkless = true;
    return rep;
}

long long mader_bound(int r, long long n) {
    if (r < 3 || r > 7) throw std::invalid_argument("mader_bound: need 3 <= r <= 7");
    return static_cast<long long>(r - 2) * n - static_cast<long long>(r - 1) * (r - 2) / 2;
}

bool check_mader(const Graph& g, int r) {
    return g.edge_count() <= mader_bound(r, g.vertex_count());
}

namespace {

Graph complete_graph_local(int n) {
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

}  // namespace

std::variant<MinorWitness, CliqueSeparation> triangle_saturated_minor(const Graph& g,
                                                                      int r) {
    if (r < 3 || r > 6)
        throw std::invalid_argument("triangle_saturated_minor: need 3 <= r <= 6");
    if (g.edge_count() == 0)
        throw std::invalid_argument("triangle_saturated_minor: graph has no edge");
    for (auto e : g.edges())
        if (triangles_through_edge(g, e) < r - 2)
            throw std::invalid_argument(
                "triangle_saturated_minor: an edge lies in fewer than r-2 triangles");

    auto w = has_minor(g, complete_graph_local(r));
    if (w) return *w;
    if (r <= 5)
        throw std::logic_error("triangle_saturated_minor: guaranteed K_r minor not found");
    if (!is_connected(g)) return split_disconnected(g);
    auto sep = find_clique_separator(g, 4);
    if (!sep)
        throw std::logic_error(
            "triangle_saturated_minor: no K_6 minor and no clique separator");
    return *sep;
}

}  // namespace sf
