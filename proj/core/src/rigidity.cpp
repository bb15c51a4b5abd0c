#include "stressfree/rigidity.hpp"

#include <algorithm>
#include <stdexcept>

#include "stressfree/field.hpp"

namespace sf {

FieldMatrix rigidity_matrix(const Graph& g, const GenericConfiguration& cfg) {
    if (cfg.n != g.vertex_count())
        throw std::invalid_argument("rigidity_matrix: configuration size mismatch");
    if (cfg.d < 1) throw std::invalid_argument("rigidity_matrix: need d >= 1");
    const int d = cfg.d;
    FieldMatrix m(d * g.vertex_count(), g.edge_count());
    for (int j = 0; j < g.edge_count(); ++j) {
        auto [u, v] = g.edges()[j];
        for (int i = 0; i < d; ++i) {
            uint64_t diff = field::sub(cfg.coord(i, u), cfg.coord(i, v));
            m.at((u - 1) * d + i, j) = diff;
            m.at((v - 1) * d + i, j) = field::neg(diff);
        }
    }
    return m;
}

int target_rank(int n, int d) {
    if (n < 0 || d < 1) throw std::invalid_argument("target_rank: need n >= 0, d >= 1");
    if (n >= d + 1) return d * n - d * (d + 1) / 2;
    return n * (n - 1) / 2;
}

RigidityReport analyze_rigidity(const Graph& g, int d, int trials, uint64_t base_seed) {
    if (d < 1) throw std::invalid_argument("analyze_rigidity: need d >= 1");
    if (trials < 1) throw std::invalid_argument("analyze_rigidity: need trials >= 1");

    RigidityReport rep;
    rep.d = d;
    rep.n = g.vertex_count();
    rep.e = g.edge_count();
    rep.trials = trials;
    rep.seeds = trial_seeds(base_seed, trials);

    int best = 0;
    for (uint64_t s : rep.seeds) {
        auto cfg = generic_configuration(s, g.vertex_count(), d);
        best = std::max(best, rank(rigidity_matrix(g, cfg)));
    }
    rep.rank = best;
    rep.stress_dim = rep.e - best;
    rep.target_rank = target_rank(rep.n, d);
    rep.is_stress_free = rep.stress_dim == 0;
    rep.is_rigid = rep.rank == rep.target_rank;
    return rep;
}

}  // namespace sf
