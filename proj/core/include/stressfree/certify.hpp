#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "stressfree/generic.hpp"
#include "stressfree/graph.hpp"
#include "stressfree/minors.hpp"
#include "stressfree/shifting.hpp"

namespace sf {

struct ContractionStep {
    Edge edge;               // labels in the graph at this node
    int triangle_count = -1;  // -1 when not recorded (parsed certificates)
};

// Node of a stress-freeness certificate tree. A contraction node has one
// child, a clique-sum node two; leaves claim the current graph is edgeless or
// a complete graph on at most r-1 vertices.
struct CertificateNode {
    enum class Kind { contraction, clique_sum, base_edgeless, base_small_clique };

    Kind kind = Kind::base_edgeless;
    ContractionStep step;                      // contraction
    std::unique_ptr<CertificateNode> child;    // contraction
    std::vector<int> clique;                   // clique_sum (may be empty)
    std::unique_ptr<CertificateNode> left;     // clique_sum: side with lowest label
    std::unique_ptr<CertificateNode> right;    // clique_sum: the rest
    int clique_order = 0;                      // base_small_clique
};

struct Certificate {
    int r = 0;
    int n = 0;                    // vertex count of the root graph
    std::vector<uint64_t> seeds;  // consecutive seeds for numeric replay
    std::unique_ptr<CertificateNode> root;
};

// Line-oriented text format: header "CERT r n seed1,seed2,...", then one line
// per node in preorder: "C u v", "S k c1 .. ck", "LE", "LK m". Parsing the
// output of serialize_certificate and re-serializing is byte identical.
std::string serialize_certificate(const Certificate& c);
Certificate parse_certificate(const std::string& text);

// Exactly one of the two members is set.
struct CertifyOutcome {
    std::optional<Certificate> certificate;  // proves generic (r-2)-stress-freeness
    std::optional<MinorWitness> witness;     // a K_r minor of the input
};

// Certifying decision procedure for 2 <= r <= 6: repeatedly contracts the
// lexicographically least edge lying in at most r-3 triangles; when stuck,
// either finds a K_r minor (lifted back through the contractions) or, for
// r = 6, splits along a clique of at most 4 vertices and recurses.
CertifyOutcome certify(const Graph& g, int r, int trials = kDefaultTrials,
                       uint64_t base_seed = kDefaultSeed);

struct ReplayReport {
    bool ok = false;
    std::string node_path;  // where replay failed, "" when ok
    std::string reason;
};

// Re-validates every node against g: contraction triangle counts, clique-sum
// structure, leaf claims. With verify_numeric, additionally checks generic
// (r-2)-stress-freeness at every leaf (and, in deep mode, at every node).
ReplayReport replay_certificate(const Graph& g, const Certificate& c,
                                bool verify_numeric, bool deep = false);

// Largest r such that K_r embeds in the closed surface of the given genus
// (genus may be half-integral, e.g. 1/2 for the projective plane; must be
// positive): floor((7 + sqrt(1 + 48g)) / 2), computed exactly.
int heawood_number(long long genus_num, long long genus_den = 1);

struct SurfaceVerdict {
    bool obstructed = false;   // true: g cannot embed in the surface
    int heawood = 0;           // H(genus)
    int tested_r = 0;          // H(genus) + 1
    bool pair_present = false;  // {tested_r - 1, tested_r} in the shifted graph
    int reduced_n = 0;         // vertices left after degree reduction
};

// Shifting-based surface obstruction: vertices of degree <= H(g)-1 are
// deleted first (this preserves the relevant pair of the shifted graph), then
// g is obstructed iff {H, H+1} lies in the chosen shifting of the rest.
SurfaceVerdict surface_obstruction(const Graph& g, long long genus_num,
                                   long long genus_den = 1,
                                   ShiftKind kind = ShiftKind::symmetric,
                                   int trials = kDefaultTrials,
                                   uint64_t base_seed = kDefaultSeed);

}  // namespace sf
