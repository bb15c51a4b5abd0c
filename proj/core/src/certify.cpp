#include "stressfree/certify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "stressfree/rigidity.hpp"

namespace sf {

namespace {

Graph complete_on(int n) {
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

MinorWitness lift_through_contraction(const Graph& pre, const Graph& pattern,
                                      const EdgeContractionRecord& rec,
                                      const MinorWitness& w) {
    std::vector<std::vector<int>> preimage(pre.vertex_count());  // by new label - 1
    for (int old = 1; old <= pre.vertex_count(); ++old)
        preimage[rec.relabeling[old - 1] - 1].push_back(old);

    MinorWitness out;
    out.host_n = pre.vertex_count();
    out.pattern = w.pattern;
    out.branch_sets.reserve(w.branch_sets.size());
    for (const auto& set : w.branch_sets) {
        std::vector<int> lifted;
        for (int v : set)
            for (int p : preimage[v - 1]) lifted.push_back(p);
        std::sort(lifted.begin(), lifted.end());
        out.branch_sets.push_back(std::move(lifted));
    }
    if (!verify_minor_witness(pre, pattern, out))
        throw std::logic_error("certify: lifted witness failed validation");
    return out;
}

MinorWitness lift_through_vertex_map(const Graph& parent, const Graph& pattern,
                                     const std::vector<int>& old_labels,
                                     const MinorWitness& w) {
    MinorWitness out;
    out.host_n = parent.vertex_count();
    out.pattern = w.pattern;
    out.branch_sets.reserve(w.branch_sets.size());
    for (const auto& set : w.branch_sets) {
        std::vector<int> lifted;
        lifted.reserve(set.size());
        for (int v : set) lifted.push_back(old_labels[v - 1]);
        std::sort(lifted.begin(), lifted.end());
        out.branch_sets.push_back(std::move(lifted));
    }
    if (!verify_minor_witness(parent, pattern, out))
        throw std::logic_error("certify: witness lift through split failed validation");
    return out;
}

struct BuildResult {
    std::unique_ptr<CertificateNode> node;
    std::optional<MinorWitness> witness;
};

BuildResult build(const Graph& g, int r);

BuildResult build_split(const Graph& g, int r, const CliqueSeparation& sep) {
    Graph pattern = complete_on(r);
    auto left = build(sep.g1, r);
    if (left.witness)
        return {nullptr, lift_through_vertex_map(g, pattern, sep.side1, *left.witness)};
    auto right = build(sep.g2, r);
    if (right.witness)
        return {nullptr, lift_through_vertex_map(g, pattern, sep.side2, *right.witness)};

    auto node = std::make_unique<CertificateNode>();
    node->kind = CertificateNode::Kind::clique_sum;
    node->clique = sep.clique;
    node->left = std::move(left.node);
    node->right = std::move(right.node);
    return {std::move(node), std::nullopt};
}

BuildResult build(const Graph& g, int r) {
    if (g.edge_count() == 0) {
        auto node = std::make_unique<CertificateNode>();
        node->kind = CertificateNode::Kind::base_edgeless;
        return {std::move(node), std::nullopt};
    }
    if (r == 2) {
        auto [u, v] = g.edges()[0];
        MinorWitness w;
        w.host_n = g.vertex_count();
        w.pattern = complete_on(2);
        w.branch_sets = {{u}, {v}};
        return {nullptr, std::move(w)};
    }

    for (auto e : g.edges()) {  // edges sorted, so first eligible is lex-least
        int t = triangles_through_edge(g, e);
        if (t > r - 3) continue;
        auto [contracted, rec] = contract_edge(g, e);
        auto sub = build(contracted, r);
        if (sub.witness)
            return {nullptr,
                    lift_through_contraction(g, complete_on(r), rec, *sub.witness)};
        auto node = std::make_unique<CertificateNode>();
        node->kind = CertificateNode::Kind::contraction;
        node->step = {e, t};
        node->child = std::move(sub.node);
        return {std::move(node), std::nullopt};
    }

    // Stuck: at least one edge, every edge in >= r-2 triangles.
    if (auto w = has_minor(g, complete_on(r))) return {nullptr, std::move(*w)};
    if (r <= 5)
        throw std::logic_error("certify: triangle-saturated graph lost its K_r minor");
    if (!is_connected(g)) return build_split(g, r, split_disconnected(g));
    auto sep = find_clique_separator(g, 4);
    if (!sep)
        throw std::logic_error(
            "certify: no K_6 minor and no small clique separator in saturated graph");
    return build_split(g, r, *sep);
}

}  // namespace

CertifyOutcome certify(const Graph& g, int r, int trials, uint64_t base_seed) {
    if (r < 2 || r > 6) throw std::invalid_argument("certify: need 2 <= r <= 6");
    if (trials < 1) throw std::invalid_argument("certify: need trials >= 1");

    auto res = build(g, r);
    // The contraction chain can reach an edgeless graph even when a K_r minor
    // exists (the graph is then stress free anyway). A final exhaustive search
    // keeps the outcome a decision: witness iff the minor exists.
    if (!res.witness)
        if (auto w = has_minor(g, complete_on(r))) res = {nullptr, std::move(*w)};

    CertifyOutcome out;
    if (res.witness) {
        if (!verify_minor_witness(g, complete_on(r), *res.witness))
            throw std::logic_error("certify: final witness failed validation");
        out.witness = std::move(res.witness);
        return out;
    }
    Certificate c;
    c.r = r;
    c.n = g.vertex_count();
    c.seeds = trial_seeds(base_seed, trials);
    c.root = std::move(res.node);
    out.certificate = std::move(c);
    return out;
}

namespace {

void serialize_node(const CertificateNode& node, std::ostringstream& out) {
    switch (node.kind) {
        case CertificateNode::Kind::contraction:
            out << "C " << node.step.edge.first << ' ' << node.step.edge.second << '\n';
            serialize_node(*node.child, out);
            break;
        case CertificateNode::Kind::clique_sum:
            out << "S " << node.clique.size();
            for (int v : node.clique) out << ' ' << v;
            out << '\n';
            serialize_node(*node.left, out);
            serialize_node(*node.right, out);
            break;
        case CertificateNode::Kind::base_edgeless:
            out << "LE\n";
            break;
        case CertificateNode::Kind::base_small_clique:
            out << "LK " << node.clique_order << '\n';
            break;
    }
}

std::unique_ptr<CertificateNode> parse_node(const std::vector<std::string>& lines,
                                            size_t& pos) {
    if (pos >= lines.size())
        throw std::invalid_argument("certificate: unexpected end of node list");
    std::istringstream in(lines[pos++]);
    std::string tag;
    in >> tag;
    auto node = std::make_unique<CertificateNode>();
    auto expect_done = [&in](const std::string& where) {
        std::string extra;
        if (in >> extra)
            throw std::invalid_argument("certificate: trailing tokens on " + where);
    };
    if (tag == "C") {
        node->kind = CertificateNode::Kind::contraction;
        int u = 0, v = 0;
        if (!(in >> u >> v) || u < 1 || v < 1 || u == v)
            throw std::invalid_argument("certificate: malformed contraction line");
        expect_done("C");
        node->step.edge = make_edge(u, v);
        node->step.triangle_count = -1;
        node->child = parse_node(lines, pos);
    } else if (tag == "S") {
        node->kind = CertificateNode::Kind::clique_sum;
        int k = -1;
        if (!(in >> k) || k < 0)
            throw std::invalid_argument("certificate: malformed split line");
        for (int i = 0; i < k; ++i) {
            int v = 0;
            if (!(in >> v) || v < 1)
                throw std::invalid_argument("certificate: malformed split clique");
            node->clique.push_back(v);
        }
        expect_done("S");
        node->left = parse_node(lines, pos);
        node->right = parse_node(lines, pos);
    } else if (tag == "LE") {
        expect_done("LE");
        node->kind = CertificateNode::Kind::base_edgeless;
    } else if (tag == "LK") {
        node->kind = CertificateNode::Kind::base_small_clique;
        if (!(in >> node->clique_order) || node->clique_order < 0)
            throw std::invalid_argument("certificate: malformed LK line");
        expect_done("LK");
    } else {
        throw std::invalid_argument("certificate: unknown node tag '" + tag + "'");
    }
    return node;
}

}  // namespace

std::string serialize_certificate(const Certificate& c) {
    std::ostringstream out;
    out << "CERT " << c.r << ' ' << c.n << ' ';
    for (size_t i = 0; i < c.seeds.size(); ++i) {
        if (i) out << ',';
        out << c.seeds[i];
    }
    out << '\n';
    if (!c.root) throw std::invalid_argument("serialize_certificate: empty tree");
    serialize_node(*c.root, out);
    return out.str();
}

Certificate parse_certificate(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    if (lines.empty()) throw std::invalid_argument("certificate: empty input");

    std::istringstream header(lines[0]);
    std::string magic, seed_list;
    Certificate c;
    if (!(header >> magic >> c.r >> c.n >> seed_list) || magic != "CERT")
        throw std::invalid_argument("certificate: malformed header");
    if (c.r < 2 || c.r > 6 || c.n < 0)
        throw std::invalid_argument("certificate: header out of range");
    std::istringstream seeds(seed_list);
    std::string tok;
    while (std::getline(seeds, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("certificate: empty seed token");
        c.seeds.push_back(std::stoull(tok));
    }
    if (c.seeds.empty()) throw std::invalid_argument("certificate: no seeds");

    size_t pos = 1;
    c.root = parse_node(lines, pos);
    if (pos != lines.size())
        throw std::invalid_argument("certificate: trailing lines after tree");
    return c;
}

namespace {

struct ReplayContext {
    int r;
    bool verify_numeric;
    bool deep;
    const std::vector<uint64_t>& seeds;
    ReplayReport failure;
    bool failed = false;

    bool fail(const std::string& path, const std::string& reason) {
        if (!failed) {
            failed = true;
            failure.ok = false;
            failure.node_path = path;
            failure.reason = reason;
        }
        return false;
    }

    bool stress_free(const Graph& g) {
        if (r == 2) return g.edge_count() == 0;
        int best = 0;
        for (uint64_t s : seeds)
            best = std::max(best, analyze_rigidity(g, r - 2, 1, s).rank);
        return best == g.edge_count();
    }

    bool walk(const Graph& g, const CertificateNode& node, const std::string& path) {
        if (deep && verify_numeric && !stress_free(g))
            return fail(path, "graph at node is not generically stress free");
        switch (node.kind) {
            case CertificateNode::Kind::contraction: {
                auto [u, v] = node.step.edge;
                if (!g.has_edge(u, v))
                    return fail(path, "contraction edge is not present");
                int t = triangles_through_edge(g, {u, v});
                if (node.step.triangle_count >= 0 && node.step.triangle_count != t)
                    return fail(path, "recorded triangle count does not match");
                if (t > r - 3)
                    return fail(path, "contraction edge lies in more than r-3 triangles");
                if (!node.child) return fail(path, "contraction node without child");
                auto contracted = contract_edge(g, {u, v}).first;
                return walk(contracted, *node.child,
                            path + "/C(" + std::to_string(u) + "," + std::to_string(v) + ")");
            }
            case CertificateNode::Kind::clique_sum: {
                if (r != 6) return fail(path, "clique-sum node outside r=6");
                if (static_cast<int>(node.clique.size()) > 4)
                    return fail(path, "clique-sum joint larger than 4");
                if (!node.left || !node.right)
                    return fail(path, "clique-sum node without two children");
                CliqueSeparation sep;
                try {
                    sep = node.clique.empty() ? split_disconnected(g)
                                              : split_along_clique(g, node.clique);
                } catch (const std::invalid_argument& err) {
                    return fail(path, err.what());
                }
                std::string base = path + "/S{";
                for (size_t i = 0; i < node.clique.size(); ++i)
                    base += (i ? "," : "") + std::to_string(node.clique[i]);
                base += "}";
                return walk(sep.g1, *node.left, base + ":1") &&
                       walk(sep.g2, *node.right, base + ":2");
            }
            case CertificateNode::Kind::base_edgeless:
                if (g.edge_count() != 0)
                    return fail(path, "edgeless leaf has edges");
                break;
            case CertificateNode::Kind::base_small_clique:
                if (g.vertex_count() != node.clique_order)
                    return fail(path, "small-clique leaf order mismatch");
                if (g.edge_count() != g.vertex_count() * (g.vertex_count() - 1) / 2)
                    return fail(path, "small-clique leaf is not complete");
                if (node.clique_order > r - 1)
                    return fail(path, "small-clique leaf larger than r-1");
                break;
        }
        if (verify_numeric && !stress_free(g))
            return fail(path, "leaf graph is not generically stress free");
        return true;
    }
};

}  // namespace

ReplayReport replay_certificate(const Graph& g, const Certificate& c,
                                bool verify_numeric, bool deep) {
    ReplayReport rep;
    if (!c.root) {
        rep.reason = "certificate has no root node";
        return rep;
    }
    if (c.n != g.vertex_count()) {
        rep.reason = "certificate vertex count does not match graph";
        return rep;
    }
    if (c.r < 2 || c.r > 6) {
        rep.reason = "certificate r out of range";
        return rep;
    }
    if (c.seeds.empty()) {
        rep.reason = "certificate has no seeds";
        return rep;
    }
    ReplayContext ctx{c.r, verify_numeric, deep, c.seeds, {}, false};
    if (ctx.walk(g, *c.root, "root")) {
        rep.ok = true;
        return rep;
    }
    return ctx.failure;
}

int heawood_number(long long genus_num, long long genus_den) {
    if (genus_den == 0) throw std::invalid_argument("heawood_number: zero denominator");
    if (genus_den < 0) {
        genus_den = -genus_den;
        genus_num = -genus_num;
    }
    if (genus_num <= 0)
        throw std::invalid_argument("heawood_number: genus must be positive");
    const long long rhs = genus_den + 48 * genus_num;  // den * (1 + 48 g)
    int h = 0;
    for (;;) {
        long long t = 2LL * (h + 1) - 7;
        if (t < 0 || genus_den * t * t <= rhs)
            ++h;
        else
            break;
    }
    return h;
}

SurfaceVerdict surface_obstruction(const Graph& g, long long genus_num,
                                   long long genus_den, ShiftKind kind, int trials,
                                   uint64_t base_seed) {
    SurfaceVerdict v;
    v.heawood = heawood_number(genus_num, genus_den);
    v.tested_r = v.heawood + 1;
    Graph reduced = delete_low_degree_vertices(g, v.tested_r - 2);
    v.reduced_n = reduced.vertex_count();
    if (reduced.edge_count() == 0) {
        v.pair_present = false;
        v.obstructed = false;
        return v;
    }
    auto delta = shift(reduced, kind, trials, base_seed);
    v.pair_present = delta.graph().has_edge(v.tested_r - 1, v.tested_r);
    v.obstructed = v.pair_present;
    return v;
}

}  // namespace sf
