#include "stressfree/shifting.hpp"

#include <algorithm>
#include <stdexcept>

#include "stressfree/field.hpp"

namespace sf {

const char* to_string(ShiftKind k) {
    return k == ShiftKind::exterior ? "exterior" : "symmetric";
}

int interior_product_sign(const std::vector<int>& S, const std::vector<int>& T) {
    for (int t : T)
        if (!std::binary_search(S.begin(), S.end(), t)) return 0;
    int a = 0;
    for (int s : S) {
        if (std::binary_search(T.begin(), T.end(), s)) continue;
        for (int t : T)
            if (t < s) ++a;
    }
    return a % 2 == 0 ? 1 : -1;
}

FieldMatrix exterior_boundary_matrix(const Graph& g, int d,
                                     const GenericConfiguration& cfg) {
    if (cfg.n != g.vertex_count() || cfg.d != d)
        throw std::invalid_argument("exterior_boundary_matrix: configuration mismatch");
    if (d < 1) throw std::invalid_argument("exterior_boundary_matrix: need d >= 1");
    FieldMatrix m(d * g.vertex_count(), g.edge_count());
    for (int j = 0; j < g.edge_count(); ++j) {
        auto [a, b] = g.edges()[j];
        for (int i = 0; i < d; ++i) {
            m.at((a - 1) * d + i, j) = cfg.coord(i, b);
            m.at((b - 1) * d + i, j) = field::neg(cfg.coord(i, a));
        }
    }
    return m;
}

namespace {

int boundary_rank(const Graph& g, int d, uint64_t seed) {
    auto cfg = generic_configuration(seed, g.vertex_count(), d);
    return rank(exterior_boundary_matrix(g, d, cfg));
}

Graph complete_on(int n) {
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

}  // namespace

bool is_d_acyclic(const Graph& g, int d, int trials, uint64_t base_seed) {
    if (d < 1) throw std::invalid_argument("is_d_acyclic: need d >= 1");
    if (g.edge_count() == 0) return true;
    int best = 0;
    for (uint64_t s : trial_seeds(base_seed, trials))
        best = std::max(best, boundary_rank(g, d, s));
    return best == g.edge_count();
}

bool is_d_hyperconnected(const Graph& g, int d, int trials, uint64_t base_seed) {
    if (d < 1) throw std::invalid_argument("is_d_hyperconnected: need d >= 1");
    Graph kn = complete_on(g.vertex_count());
    int best_g = 0, best_k = 0;
    for (uint64_t s : trial_seeds(base_seed, trials)) {
        auto cfg = generic_configuration(s, g.vertex_count(), d);
        best_g = std::max(best_g, rank(exterior_boundary_matrix(g, d, cfg)));
        best_k = std::max(best_k, rank(exterior_boundary_matrix(kn, d, cfg)));
    }
    return best_g == best_k;
}

namespace {

// Per-seed exterior shift: greedily select wedge pairs {i<j} (lexicographic)
// whose projections to the edge coordinates of g are independent.
std::vector<Edge> exterior_shift_once(const Graph& g, uint64_t seed) {
    const int n = g.vertex_count();
    const int e = g.edge_count();
    if (e == 0) return {};
    auto cfg = generic_configuration(seed, n, n);
    ColumnSpace space;
    std::vector<Edge> kept;
    std::vector<uint64_t> col(e);
    for (int i = 1; i <= n && static_cast<int>(kept.size()) < e; ++i) {
        for (int j = i + 1; j <= n && static_cast<int>(kept.size()) < e; ++j) {
            for (int t = 0; t < e; ++t) {
                auto [u, w] = g.edges()[t];
                uint64_t plus = field::mul(cfg.coord(i - 1, u), cfg.coord(j - 1, w));
                uint64_t minus = field::mul(cfg.coord(i - 1, w), cfg.coord(j - 1, u));
                col[t] = field::sub(plus, minus);
            }
            if (space.absorb(col)) kept.emplace_back(i, j);
        }
    }
    return kept;
}

// Per-seed symmetric shift: work in the degree-2 part of the face ring
// (basis: one coordinate per edge plus one per vertex square), greedily
// select monomials y_i*y_j, keep those with i >= 2 and map them to edges
// {i-1, j}.
std::vector<Edge> symmetric_shift_once(const Graph& g, uint64_t seed) {
    const int n = g.vertex_count();
    const int e = g.edge_count();
    if (e == 0) return {};
    auto cfg = generic_configuration(seed, n, n);
    const int dim = e + n;
    ColumnSpace space;
    std::vector<Edge> out;
    int kept_total = 0;
    std::vector<uint64_t> col(dim);
    for (int i = 1; i <= n && kept_total < dim; ++i) {
        for (int j = i; j <= n && kept_total < dim; ++j) {
            for (int t = 0; t < e; ++t) {
                auto [u, w] = g.edges()[t];
                uint64_t a = field::mul(cfg.coord(i - 1, u), cfg.coord(j - 1, w));
                uint64_t b = field::mul(cfg.coord(i - 1, w), cfg.coord(j - 1, u));
                col[t] = field::add(a, b);
            }
            for (int u = 1; u <= n; ++u)
                col[e + u - 1] = field::mul(cfg.coord(i - 1, u), cfg.coord(j - 1, u));
            if (space.absorb(col)) {
                ++kept_total;
                if (i >= 2) out.emplace_back(i - 1, j);
            }
        }
    }
    return out;
}

}  // namespace

std::pair<size_t, bool> combine_shift_trials(const std::vector<std::vector<Edge>>& results) {
    if (results.empty()) throw std::invalid_argument("combine_shift_trials: no results");
    bool all_equal = true;
    for (size_t i = 1; i < results.size(); ++i)
        if (results[i] != results[0]) {
            all_equal = false;
            break;
        }
    if (all_equal) return {0, false};
    size_t max_size = 0;
    for (const auto& r : results) max_size = std::max(max_size, r.size());
    size_t best = results.size();
    for (size_t i = 0; i < results.size(); ++i) {
        if (results[i].size() != max_size) continue;
        if (best == results.size() || results[i] < results[best]) best = i;
    }
    return {best, true};
}

namespace {

ShiftedGraph shift_with_consensus(const Graph& g, ShiftKind kind, int trials,
                                  uint64_t base_seed,
                                  std::vector<Edge> (*run)(const Graph&, uint64_t)) {
    if (trials < 1) throw std::invalid_argument("shift: need trials >= 1");
    ShiftedGraph s;
    s.kind = kind;
    s.n = g.vertex_count();
    s.vertices_kept = g.vertex_count();
    s.trials = trials;

    std::vector<std::vector<Edge>> results;
    uint64_t next_seed = base_seed;
    for (int i = 0; i < trials; ++i) {
        s.seeds.push_back(next_seed);
        results.push_back(run(g, next_seed++));
    }
    auto [idx, flagged] = combine_shift_trials(results);
    // A disagreement means some trial hit a nonzero polynomial identity by
    // accident; discard sub-maximal trials and resample, capped at 5 retries.
    for (int retry = 0; flagged && retry < 5; ++retry) {
        size_t max_size = 0;
        for (const auto& r : results) max_size = std::max(max_size, r.size());
        std::vector<std::vector<Edge>> pruned;
        for (auto& r : results)
            if (r.size() == max_size) pruned.push_back(std::move(r));
        results = std::move(pruned);
        bool settled = std::all_of(results.begin(), results.end(),
                                   [&](const auto& r) { return r == results[0]; });
        if (settled && static_cast<int>(results.size()) >= trials) break;
        s.seeds.push_back(next_seed);
        results.push_back(run(g, next_seed++));
    }
    auto [final_idx, still_flagged] = combine_shift_trials(results);
    s.degenerate_flagged = flagged || still_flagged;
    s.edges = results[final_idx];
    return s;
}

}  // namespace

ShiftedGraph exterior_shift(const Graph& g, int trials, uint64_t base_seed) {
    return shift_with_consensus(g, ShiftKind::exterior, trials, base_seed,
                                &exterior_shift_once);
}

ShiftedGraph symmetric_shift(const Graph& g, int trials, uint64_t base_seed) {
    return shift_with_consensus(g, ShiftKind::symmetric, trials, base_seed,
                                &symmetric_shift_once);
}

ShiftedGraph shift(const Graph& g, ShiftKind kind, int trials, uint64_t base_seed) {
    return kind == ShiftKind::exterior ? exterior_shift(g, trials, base_seed)
                                       : symmetric_shift(g, trials, base_seed);
}

bool gin_monomial_less(std::pair<int, int> a, std::pair<int, int> b) {
    if (a == b) return false;
    // Exponent vectors of y_{a1} y_{a2} vs y_{b1} y_{b2}; at the first index
    // where they differ the larger exponent wins (comes earlier).
    int first = std::min({a.first, a.second, b.first, b.second});
    int last = std::max({a.first, a.second, b.first, b.second});
    for (int i = first; i <= last; ++i) {
        int ea = (a.first == i) + (a.second == i);
        int eb = (b.first == i) + (b.second == i);
        if (ea != eb) return ea > eb;
    }
    return false;
}

int chromatic_of_shifted(const Graph& g) {
    if (!is_shifted(g))
        throw std::invalid_argument("chromatic_of_shifted: graph is not shifted");
    int k = 1;
    while (g.has_edge(k, k + 1)) ++k;
    return k;
}

int chromatic_of_shifted(const ShiftedGraph& s) { return chromatic_of_shifted(s.graph()); }

}  // namespace sf
